use std::iter::Peekable;
use std::str::Chars;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

use super::graded::GradedOperator;
use super::module::DunklModule;

/// Builds the graded matrix of a word in the generators.
///
/// Grammar: sums and differences of products; factors are `x<i>`, `y<i>`
/// (1-based), `w<k>` (group element index), `s<k>` (reflection in the k-th
/// positive root, 1-based), rational constants `p/q`, `[a, b]`, `(a)` and
/// `a^k`. Products compose right to left, as operators.
pub fn operator_matrix<S: Scalar>(m: &DunklModule<S>, expr: &str) -> Result<GradedOperator<S>> {
    let mut p = Parser { m, it: expr.chars().peekable(), src: expr };
    let op = p.sum()?;
    p.skip_ws();
    match p.it.next() {
        None => Ok(op),
        Some(c) => Err(p.err(&format!("unexpected {c:?}"))),
    }
}

struct Parser<'a, S: Scalar> {
    m: &'a DunklModule<S>,
    it: Peekable<Chars<'a>>,
    src: &'a str,
}

impl<S: Scalar> Parser<'_, S> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in operator expression {:?}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.it.peek().is_some_and(|c| c.is_whitespace()) {
            self.it.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.it.peek().copied()
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.it.peek().copied().filter(char::is_ascii_digit) {
            s.push(c);
            self.it.next();
        }
        s
    }

    fn index(&mut self) -> Result<usize> {
        let d = self.digits();
        d.parse().map_err(|_| self.err("expected an index"))
    }

    fn sum(&mut self) -> Result<GradedOperator<S>> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.it.next();
                self.product()?.neg()
            }
            _ => self.product()?,
        };
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.it.next();
            let t = self.product()?;
            if t.shift() != acc.shift() {
                return Err(self.err("terms of different degree shift"));
            }
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<GradedOperator<S>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.it.next();
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' || c == '[' => {}
                _ => return Ok(acc),
            }
            acc = acc.compose(&self.power()?);
        }
    }

    fn power(&mut self) -> Result<GradedOperator<S>> {
        let f = self.factor()?;
        if self.peek() == Some('^') {
            self.it.next();
            self.skip_ws();
            let e = self.index()?;
            return Ok(f.pow(e as u32));
        }
        Ok(f)
    }

    fn factor(&mut self) -> Result<GradedOperator<S>> {
        let m = self.m;
        let n = m.n();
        match self.peek() {
            Some('(') => {
                self.it.next();
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.it.next();
                let a = self.sum()?;
                self.expect(',')?;
                let b = self.sum()?;
                self.expect(']')?;
                Ok(a.commutator(&b))
            }
            Some(c) if c.is_ascii_digit() => {
                let mut s = self.digits();
                if self.it.peek() == Some(&'/') {
                    self.it.next();
                    s.push('/');
                    s.push_str(&self.digits());
                }
                let q: Rational = s.parse().map_err(|_| self.err("bad constant"))?;
                Ok(GradedOperator::scalar(m.dims().clone(), &S::from_rational(&q)))
            }
            Some(c @ ('x' | 'y' | 'w' | 's')) => {
                self.it.next();
                let k = self.index()?;
                match c {
                    'x' | 'y' if k == 0 || k > n => Err(self.err(&format!("variable index {k} out of range 1..={n}"))),
                    'x' => Ok(m.x(k - 1)),
                    'y' => Ok(m.y(k - 1)),
                    'w' if k >= m.group().order() => Err(self.err(&format!("group element {k} out of range"))),
                    'w' => Ok(m.group_element(k)),
                    _ if k == 0 || k > m.root_system().num_roots() => {
                        Err(self.err(&format!("root index {k} out of range")))
                    }
                    _ => Ok(m.group_element(m.group().reflection_index(k - 1))),
                }
            }
            Some(c) => Err(self.err(&format!("unexpected {c:?}"))),
            None => Err(self.err("unexpected end")),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.it.next();
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }
}
