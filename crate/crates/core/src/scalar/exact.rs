use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FloatScalar, Rational, ScalarError};

/// Element `(a + b√2) + i(c + d√2)` of the field ℚ(i, √2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactScalar {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

// Multiplication in ℚ(√2): (p + q√2)(r + s√2).
fn mul_surd(p: &Rational, q: &Rational, r: &Rational, s: &Rational) -> (Rational, Rational) {
    let pr = p * r;
    let qs = q * s;
    let re = if qs.is_zero() { pr } else { &pr + &(&qs * &Rational::integer(2)) };
    let ps = p * s;
    let qr = q * r;
    (re, &ps + &qr)
}

fn sign_surd(a: &Rational, b: &Rational) -> i32 {
    let (sa, sb) = (a.signum(), b.signum());
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // a and b√2 have opposite signs: compare a² with 2b².
    let lhs = a * a;
    let rhs = &(b * b) * &Rational::integer(2);
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

impl ExactScalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::ONE)
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, ..Self::default() }
    }

    pub fn integer(k: i64) -> Self {
        Self::rational(Rational::integer(k))
    }

    pub fn sqrt2() -> Self {
        Self { b: Rational::ONE, ..Self::default() }
    }

    pub fn i() -> Self {
        Self { c: Rational::ONE, ..Self::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.is_real() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: self.b.clone(), c: -&self.c, d: -&self.d }
    }

    /// The field automorphism √2 ↦ −√2.
    pub fn surd_conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, c: self.c.clone(), d: -&self.d }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { a: &self.a * r, b: &self.b * r, c: &self.c * r, d: &self.d * r }
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // 1/(r + is) = (r - is)/(r² + s²) with r, s ∈ ℚ(√2) and r² + s² > 0.
        let (r2a, r2b) = mul_surd(&self.a, &self.b, &self.a, &self.b);
        let (s2a, s2b) = mul_surd(&self.c, &self.d, &self.c, &self.d);
        let na = &r2a + &s2a;
        let nb = &r2b + &s2b;
        // 1/(na + nb√2) = (na - nb√2)/(na² - 2nb²)
        let den = &(&na * &na) - &(&(&nb * &nb) * &Rational::integer(2));
        let den_inv = den.recip()?;
        let ia = &na * &den_inv;
        let ib = -&(&nb * &den_inv);
        let (ra, rb) = mul_surd(&self.a, &self.b, &ia, &ib);
        let (ca, cb) = mul_surd(&self.c, &self.d, &ia, &ib);
        Ok(Self { a: ra, b: rb, c: -&ca, d: -&cb })
    }

    /// Sign of a real element; `None` when the imaginary part is nonzero.
    pub fn real_sign(&self) -> Option<i32> {
        if !self.is_real() {
            return None;
        }
        Some(sign_surd(&self.a, &self.b))
    }

    /// Square root of a nonnegative real element when it lies in ℚ(√2).
    pub fn sqrt_real(&self) -> Option<Self> {
        if self.real_sign()? < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt_exact() {
                return Some(Self::rational(r));
            }
            let half = (&self.a / &Rational::integer(2)).ok()?;
            if let Some(r) = half.sqrt_exact() {
                return Some(Self { b: r, ..Self::default() });
            }
            return None;
        }
        // (p + q√2)² = p² + 2q² + 2pq√2
        let two = Rational::integer(2);
        let disc = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &two);
        let s = disc.sqrt_exact()?;
        for cand in [&self.a + &s, &self.a - &s] {
            let p2 = (&cand / &two).ok()?;
            if let Some(p) = p2.sqrt_exact() {
                if p.is_zero() {
                    continue;
                }
                let q = (&self.b / &(&p * &two)).ok()?;
                let root = Self { a: p, b: q, ..Self::default() };
                let root = if root.real_sign() == Some(-1) { -&root } else { root };
                if &root * &root == *self {
                    return Some(root);
                }
            }
        }
        None
    }

    pub fn to_float(&self) -> FloatScalar {
        let s2 = std::f64::consts::SQRT_2;
        FloatScalar::new(self.a.to_f64() + self.b.to_f64() * s2, self.c.to_f64() + self.d.to_f64() * s2)
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Parses `p/q`, `p/q*sqrt2`, `sqrt2`, `-sqrt2` (real entries only).
    pub fn parse_real(s: &str) -> Result<Self, ScalarError> {
        let t = s.trim().replace(' ', "");
        let bad = || ScalarError::Parse(s.to_string());
        if let Some(coef) = t.strip_suffix("sqrt2") {
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let r = match coef {
                "" | "+" => Rational::ONE,
                "-" => Rational::integer(-1),
                c => c.parse::<Rational>().map_err(|_| bad())?,
            };
            return Ok(Self { b: r, ..Self::default() });
        }
        Ok(Self::rational(t.parse()?))
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if self.is_rational() {
            return o.scale(&self.a);
        }
        if o.is_rational() {
            return self.scale(&o.a);
        }
        // (r1 + i s1)(r2 + i s2) = (r1 r2 - s1 s2) + i(r1 s2 + s1 r2)
        let (rr_a, rr_b) = mul_surd(&self.a, &self.b, &o.a, &o.b);
        let (ss_a, ss_b) = mul_surd(&self.c, &self.d, &o.c, &o.d);
        let (rs_a, rs_b) = mul_surd(&self.a, &self.b, &o.c, &o.d);
        let (sr_a, sr_b) = mul_surd(&self.c, &self.d, &o.a, &o.b);
        ExactScalar { a: &rr_a - &ss_a, b: &rr_b - &ss_b, c: &rs_a + &sr_a, d: &rs_b + &sr_b }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let terms = [(&self.a, ""), (&self.b, "sqrt2"), (&self.c, "i"), (&self.d, "i*sqrt2")];
        for (r, unit) in terms {
            if r.is_zero() {
                continue;
            }
            let body = if unit.is_empty() {
                r.abs().to_string()
            } else if r.abs().is_one() {
                unit.to_string()
            } else {
                format!("{}*{}", r.abs(), unit)
            };
            let sign = if r.signum() < 0 { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if sign == "-" { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for ExactScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [&self.a, &self.b, &self.c, &self.d].serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for ExactScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b, c, d] = <[Rational; 4]>::deserialize(d)?;
        Ok(Self { a, b, c, d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ex(a: &str, b: &str, c: &str, d: &str) -> ExactScalar {
        ExactScalar::new(q(a), q(b), q(c), q(d))
    }

    #[test]
    fn surd_squares_to_two() {
        let s = ExactScalar::sqrt2();
        assert_eq!(&s * &s, ExactScalar::integer(2));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let x = ex("1", "1", "0", "0");
        // (1 + √2)(−1 + √2) = 2 − 1 = 1
        assert_eq!(x.inverse().unwrap(), ex("-1", "1", "0", "0"));
        assert!(ExactScalar::zero().inverse().is_err());
    }

    #[test]
    fn conjugations() {
        let x = ex("0", "0", "0", "1");
        assert_eq!(x.conj(), ex("0", "0", "0", "-1"));
        let y = ex("1/2", "-3", "2", "5/7");
        assert_eq!(y.conj().conj(), y);
        assert_eq!(y.surd_conj().surd_conj(), y);
        let z = ex("3", "1", "-1", "2/3");
        assert_eq!((&y * &z).conj(), &y.conj() * &z.conj());
        assert_eq!((&y * &z).surd_conj(), &y.surd_conj() * &z.surd_conj());
    }

    #[test]
    fn float_images() {
        assert_eq!(ExactScalar::rational(q("1/2")).to_float(), FloatScalar::new(0.5, 0.0));
        assert_eq!(ExactScalar::sqrt2().to_float().re, std::f64::consts::SQRT_2);
        assert_eq!(ExactScalar::i().to_float(), FloatScalar::new(0.0, 1.0));
    }

    #[test]
    fn real_sign_and_sqrt() {
        assert_eq!(ex("3", "-2", "0", "0").real_sign(), Some(1)); // 3 - 2.83
        assert_eq!(ex("2", "-2", "0", "0").real_sign(), Some(-1));
        assert_eq!(ex("0", "0", "1", "0").real_sign(), None);
        assert_eq!(ExactScalar::integer(2).sqrt_real(), Some(ExactScalar::sqrt2()));
        assert_eq!(ExactScalar::rational(q("1/2")).sqrt_real(), Some(ex("0", "1/2", "0", "0")));
        // (1 + √2)² = 3 + 2√2
        assert_eq!(ex("3", "2", "0", "0").sqrt_real(), Some(ex("1", "1", "0", "0")));
        assert_eq!(ExactScalar::integer(3).sqrt_real(), None);
    }

    #[test]
    fn parse_real_entries() {
        assert_eq!(ExactScalar::parse_real("1/2*sqrt2").unwrap(), ex("0", "1/2", "0", "0"));
        assert_eq!(ExactScalar::parse_real("-sqrt2").unwrap(), ex("0", "-1", "0", "0"));
        assert_eq!(ExactScalar::parse_real("-3/4").unwrap(), ex("-3/4", "0", "0", "0"));
        let j = serde_json::to_string(&ex("1/2", "0", "-1", "3")).unwrap();
        assert_eq!(j, r#"["1/2","0","-1","3"]"#);
        let back: ExactScalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, ex("1/2", "0", "-1", "3"));
    }
}
