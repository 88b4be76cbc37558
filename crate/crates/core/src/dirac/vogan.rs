use crate::error::{Error, Result};
use crate::pincover::{HatElement, PinCover};
use crate::report::Report;
use crate::scalar::{Rational, Scalar};

use super::{DiracContext, DiracOperator};

/// Polynomial Σ a_k Ω^{p_k} (−1)_𝔥^{e_k} in the centre of the angular
/// momentum algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralPolynomial {
    /// (coefficient, power of Ω, whether (−1)_𝔥 appears)
    pub terms: Vec<(Rational, u32, bool)>,
}

impl CentralPolynomial {
    pub fn omega_pow(k: u32) -> Self {
        Self { terms: vec![(Rational::ONE, k, false)] }
    }

    pub fn omega() -> Self {
        Self::omega_pow(1)
    }

    pub fn minus_identity() -> Self {
        Self { terms: vec![(Rational::ONE, 0, true)] }
    }

    pub fn constant(q: Rational) -> Self {
        Self { terms: vec![(q, 0, false)] }
    }
}

/// ζ_C: Ω ↦ C² − 1, (−1)_𝔥 ↦ (−1)_𝔥.
pub fn zeta_c<S: Scalar>(pin: &PinCover<S>, p: &CentralPolynomial, c: &HatElement<S>) -> Result<HatElement<S>> {
    let part = c.part();
    let gamma = pin.hat_mul(c, c)?.sub(&pin.hat_one(part))?;
    let mut out = pin.hat_one(part).scale(&S::zero());
    for (q, k, eps) in &p.terms {
        let mut t = pin.hat_pow(&gamma, *k)?;
        if *eps {
            let e = pin.epsilon(part).map_err(|_| Error::Unsupported("(−1)_𝔥 is not in W".into()))?;
            t = pin.hat_mul(&t, &e)?;
        }
        out = out.add(&t.scale(&S::from_rational(q)))?;
    }
    Ok(out)
}

/// Ω^m ⊗ 1 = γ^m + {𝔇_C, a_m} for m = 1..=max_power with the recursive
/// witnesses, and [a₁, 𝔇_C] = 0.
pub fn vogan_witness_check<S: Scalar>(ctx: &DiracContext<S>, dop: &DiracOperator<S>, max_power: u32) -> Report {
    let mut rep = Report::new();
    let max = ctx.truncation();
    let degrees = format!("degrees 0..={max}");
    let pin = ctx.pin();
    let rc = &dop.rho_c;
    let gamma = match zeta_c(pin, &CentralPolynomial::omega(), &dop.c) {
        Ok(z) => ctx.rho(&z),
        Err(e) => {
            rep.fail("vogan.zeta_omega", e.to_string());
            return rep;
        }
    };
    rep.expect(
        "vogan.zeta_omega",
        gamma
            .compare(&rc.compose(rc).add_scalar(&S::one().neg()), max)
            .err()
            .map(|e| format!("ρ(ζ_C(Ω)) vs ρ(C)² − 1: {e}")),
        degrees.clone(),
    );
    let d = &dop.op;
    let half = S::from_rational(&Rational::new(1, 2).expect("nonzero"));
    let a1 = d.scale(&half).sub(rc);
    rep.expect("vogan.a1_commutes", a1.commutator(d).check_zero(max).err().map(|e| format!("[a₁, 𝔇_C]: {e}")), degrees);
    let omega = ctx.lift(ctx.ama().omega());
    let mut a = a1.clone();
    let mut omega_pow = omega.clone();
    let mut gamma_pow = gamma.clone();
    let mut fail = None;
    for m in 1..=max_power.max(1) {
        if m > 1 {
            // a_m = a_{m−1} γ + a₁ γ^{m−1} + 2 𝔇_C a_{m−1} a₁, with gamma_pow = γ^{m−1}
            a = a.compose(&gamma).add(&a1.compose(&gamma_pow)).add(&d.compose(&a).compose(&a1).scale(&S::from_i64(2)));
            gamma_pow = gamma_pow.compose(&gamma);
            omega_pow = omega_pow.compose(&omega);
        }
        let rhs = gamma_pow.add(&d.anticommutator(&a));
        if let Err(e) = omega_pow.compare(&rhs, max) {
            fail = Some(format!("m = {m}: {e}"));
            break;
        }
    }
    rep.expect("vogan.witness", fail, format!("m = 1..={}, degrees 0..={max}", max_power.max(1)));
    rep
}
