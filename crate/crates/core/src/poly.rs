//! Dense univariate polynomials over the rationals.
//!
//! The zero polynomial is the empty coefficient vector; every other value has
//! a nonzero leading coefficient. Constructors and arithmetic re-establish
//! this after each operation, so `==` is exact mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{fmt_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `s*x + t`.
    pub fn linear(s: Rational, t: Rational) -> Self {
        Self::from_coeffs(vec![t, s])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// `p(s*x + t)`.
    pub fn subst_affine_scale(&self, s: &Rational, t: &Rational) -> Self {
        let inner = Poly::linear(s.clone(), t.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &inner) + &Poly::constant(c.clone()))
    }

    /// `p(s*x)`, cheaper than the general affine substitution.
    pub fn subst_scale(&self, s: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= s;
        }
        Poly::from_coeffs(out)
    }

    /// `Δp(x) = p(x+1) - p(x)`.
    pub fn forward_diff(&self) -> Self {
        &self.subst_affine_scale(&int(1), &int(1)) - self
    }

    /// `∇p(x) = p(x) - p(x-1)`.
    pub fn backward_diff(&self) -> Self {
        self - &self.subst_affine_scale(&int(1), &int(-1))
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// Hahn operator `(p(qx) - p(x)) / (x(q-1))`.
    pub fn q_derivative(&self, q: &Rational) -> Result<Self> {
        if q.is_one() {
            return Err(Error::InvalidParam("q-derivative needs q != 1".into()));
        }
        let num = &self.subst_scale(q) - self;
        debug_assert!(num.coeff(0).is_zero());
        let qm1 = q - Rational::one();
        Ok(Poly::from_coeffs(
            num.coeffs.iter().skip(1).map(|c| c / &qm1).collect(),
        ))
    }

    /// `𝒟_{1/q} p`.
    pub fn inverse_q_derivative(&self, q: &Rational) -> Result<Self> {
        if q.is_zero() || q.is_one() {
            return Err(Error::InvalidParam(
                "inverse q-derivative needs q not in {0, 1}".into(),
            ));
        }
        self.q_derivative(&q.recip())
    }

    /// Exact division; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (quot, rem) = self.div_rem(d)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::Unsupported("polynomial division is not exact".into()))
        }
    }

    /// Long division returning `(quotient, remainder)`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::Pole("division by the zero polynomial".into()))?;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Coefficients as `num/den` strings, ascending powers.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Poly> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Poly::from_coeffs)
    }

    /// Human readable form in variable `var`, e.g. `1 - 2x + 1/2 x^2`.
    pub fn to_text(&self, var: &str) -> String {
        self.render(var, false)
    }

    /// LaTeX math-mode form, e.g. `1 - 2x + \frac{1}{2}x^{2}`.
    pub fn to_latex(&self, var: &str) -> String {
        self.render(var, true)
    }

    fn render(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let power = match (k, latex) {
                (0, _) => String::new(),
                (1, _) => var.to_string(),
                (_, false) => format!("{var}^{k}"),
                (_, true) => format!("{var}^{{{k}}}"),
            };
            let coef = if a.is_one() && k > 0 {
                String::new()
            } else if a.is_integer() {
                a.numer().to_string()
            } else if latex {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            } else if k > 0 {
                format!("{} ", fmt_rational(&a))
            } else {
                fmt_rational(&a)
            };
            out.push_str(&coef);
            out.push_str(&power);
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text("x"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Poly::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::from_coeffs(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&int(-1))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                self.$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

/// `p(p+1)...(p+n-1)` for a polynomial `p`.
pub fn pochhammer_poly(p: &Poly, n: usize) -> Poly {
    let mut acc = Poly::one();
    let mut f = p.clone();
    for _ in 0..n {
        acc = &acc * &f;
        f = &f + &Poly::one();
    }
    acc
}

/// `(p;q)_n = (1-p)(1-pq)...(1-pq^{n-1})` for a polynomial `p`.
pub fn qpochhammer_poly(p: &Poly, q: &Rational, n: usize) -> Poly {
    let mut acc = Poly::one();
    let mut f = p.clone();
    for _ in 0..n {
        acc = &acc * &(&Poly::one() - &f);
        f = f.scale(q);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn p(v: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(Poly::from_coeffs(vec![int(0), int(0)]), Poly::zero());
        assert!(Poly::zero().coeffs().is_empty());
        assert_eq!(Poly::zero().degree(), None);
        let x = Poly::x();
        assert_eq!(&x - &x, Poly::zero());
    }

    #[test]
    fn ring_examples() {
        let x = Poly::x();
        assert_eq!(&x + &Poly::zero(), x);
        let xp1 = p(&[(1, 1), (1, 1)]);
        let xm1 = p(&[(-1, 1), (1, 1)]);
        assert_eq!(&xp1 * &xm1, p(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(
            Poly::monomial(int(1), 2).scale(&rat(1, 2)),
            Poly::monomial(rat(1, 2), 2)
        );
    }

    #[test]
    fn eval_examples() {
        let x2m1 = p(&[(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(x2m1.eval(&int(1)), int(0));
        assert_eq!(x2m1.eval(&int(0)), int(-1));
        assert_eq!(p(&[(3, 1), (2, 1)]).eval(&rat(1, 2)), int(4));
    }

    #[test]
    fn substitution_examples() {
        let x2 = Poly::monomial(int(1), 2);
        assert_eq!(
            x2.subst_affine_scale(&int(1), &int(1)),
            p(&[(1, 1), (2, 1), (1, 1)])
        );
        let q = p(&[(3, 7), (-2, 1), (5, 3)]);
        assert_eq!(q.subst_affine_scale(&int(1), &int(0)), q);
        assert_eq!(
            Poly::x().subst_affine_scale(&int(2), &int(0)),
            p(&[(0, 1), (2, 1)])
        );
        assert_eq!(q.subst_scale(&rat(-3, 2)), q.subst_affine_scale(&rat(-3, 2), &int(0)));
    }

    #[test]
    fn operator_examples() {
        let x2 = Poly::monomial(int(1), 2);
        assert_eq!(x2.forward_diff(), p(&[(1, 1), (2, 1)]));
        assert_eq!(x2.backward_diff(), p(&[(-1, 1), (2, 1)]));
        assert_eq!(x2.derivative(), p(&[(0, 1), (2, 1)]));
        assert_eq!(Poly::x().q_derivative(&rat(5, 3)).unwrap(), Poly::one());
        assert_eq!(x2.q_derivative(&int(2)).unwrap(), p(&[(0, 1), (3, 1)]));
        assert!(x2.q_derivative(&int(1)).is_err());
        assert_eq!(Poly::x().inverse_q_derivative(&rat(7, 2)).unwrap(), Poly::one());
        assert_eq!(
            x2.inverse_q_derivative(&int(2)).unwrap(),
            p(&[(0, 1), (3, 2)])
        );
        assert_eq!(
            Poly::constant(rat(4, 9)).inverse_q_derivative(&int(3)).unwrap(),
            Poly::zero()
        );
        assert!(x2.inverse_q_derivative(&int(0)).is_err());
    }

    #[test]
    fn pochhammer_poly_examples() {
        let x = Poly::x();
        assert_eq!(pochhammer_poly(&x, 0), Poly::one());
        assert_eq!(pochhammer_poly(&-&x, 1), -&x);
        assert_eq!(pochhammer_poly(&-&x, 2), p(&[(0, 1), (-1, 1), (1, 1)]));
    }

    #[test]
    fn qpochhammer_poly_examples() {
        let x = Poly::x();
        assert_eq!(qpochhammer_poly(&x, &rat(3, 5), 0), Poly::one());
        assert_eq!(qpochhammer_poly(&x, &rat(3, 5), 1), p(&[(1, 1), (-1, 1)]));
        assert_eq!(qpochhammer_poly(&x, &int(2), 2), p(&[(1, 1), (-3, 1), (2, 1)]));
    }

    #[test]
    fn rendering() {
        let q = p(&[(1, 1), (-2, 1), (1, 2)]);
        assert_eq!(q.to_text("x"), "1 - 2x + 1/2 x^2");
        assert_eq!(q.to_latex("x"), "1 - 2x + \\frac{1}{2}x^{2}");
        assert_eq!(p(&[(0, 1), (-1, 1)]).to_text("y"), "-y");
        assert_eq!(Poly::zero().to_text("x"), "0");
        assert_eq!(p(&[(-1, 3)]).to_text("x"), "-1/3");
    }

    #[test]
    fn json_roundtrip() {
        let q = p(&[(1, 1), (-2, 1), (1, 2)]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"["1","-2","1/2"]"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn division() {
        let a = p(&[(-1, 1), (0, 1), (1, 1)]);
        let d = p(&[(1, 1), (1, 1)]);
        assert_eq!(a.div_exact(&d).unwrap(), p(&[(-1, 1), (1, 1)]));
        assert!(a.div_exact(&Poly::x()).is_err());
        assert!(a.div_rem(&Poly::zero()).is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=40).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(arb_rat(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
    }

    /// `[n]_q = (q^n - 1)/(q - 1)`.
    fn qint(n: usize, q: &Rational) -> Rational {
        (num_traits::pow(q.clone(), n) - int(1)) / (q - int(1))
    }

    proptest! {
        #[test]
        fn delta_nabla_commute(a in arb_poly(15)) {
            prop_assert_eq!(a.forward_diff().backward_diff(), a.backward_diff().forward_diff());
        }

        #[test]
        fn operators_are_linear(a in arb_poly(8), b in arb_poly(8), s in arb_rat(), t in arb_rat(), q in arb_rat()) {
            prop_assume!(q != int(1) && q != int(0));
            let comb = &a.scale(&s) + &b.scale(&t);
            let ops: Vec<Box<dyn Fn(&Poly) -> Poly>> = vec![
                Box::new(|p: &Poly| p.forward_diff()),
                Box::new(|p: &Poly| p.backward_diff()),
                Box::new(|p: &Poly| p.derivative()),
                Box::new(move |p: &Poly| p.q_derivative(&q).unwrap()),
            ];
            for op in ops {
                prop_assert_eq!(op(&comb), &op(&a).scale(&s) + &op(&b).scale(&t));
            }
        }

        #[test]
        fn operators_lower_degree(a in arb_poly(12), q in arb_rat()) {
            prop_assume!(q != int(1) && q != int(0) && q != int(-1));
            if let Some(d) = a.degree() {
                if d >= 1 {
                    prop_assert_eq!(a.forward_diff().degree(), Some(d - 1));
                    prop_assert_eq!(a.backward_diff().degree(), Some(d - 1));
                    prop_assert_eq!(a.derivative().degree(), Some(d - 1));
                    // [d]_q vanishes only for roots of unity
                    prop_assert_eq!(a.q_derivative(&q).unwrap().degree(), Some(d - 1));
                }
            }
        }

        #[test]
        fn q_derivative_of_monomials(n in 0usize..=15, q in arb_rat()) {
            prop_assume!(q != int(1));
            let got = Poly::monomial(int(1), n).q_derivative(&q).unwrap();
            let want = if n == 0 { Poly::zero() } else { Poly::monomial(qint(n, &q), n - 1) };
            prop_assert_eq!(got, want);
        }

        #[test]
        fn degree_is_additive(a in arb_poly(8), b in arb_poly(8)) {
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }

        #[test]
        fn pochhammer_poly_evaluates(a in arb_poly(1), x0 in arb_rat(), n in 0usize..=8) {
            let got = pochhammer_poly(&a, n).eval(&x0);
            prop_assert_eq!(got, crate::arith::pochhammer(&a.eval(&x0), n));
        }

        #[test]
        fn strings_roundtrip(a in arb_poly(10)) {
            prop_assert_eq!(Poly::from_strings(&a.to_strings()).unwrap(), a);
        }
    }
}
