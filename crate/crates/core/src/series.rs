//! Terminating hypergeometric and basic hypergeometric series.
//!
//! Numerator parameters and the argument may be polynomials of degree at
//! most one in the variable; the sum is then an exact polynomial.

use num_traits::{One, Zero};

use crate::arith::{self, int, pow, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq)]
pub enum SeriesKind {
    /// `rFs(a; b; z) = Σ (a)_k / (b)_k z^k / k!`
    Ordinary,
    /// `rφs(a; b; q, z) = Σ (a;q)_k / (b;q)_k ((-1)^k q^{k(k-1)/2})^{1+s-r} z^k / (q;q)_k`
    Basic { q: Rational },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub numerator_params: Vec<Poly>,
    pub denominator_params: Vec<Rational>,
    pub argument: Poly,
    pub kind: SeriesKind,
    /// The sum runs over `k = 0..=terms`.
    pub terms: usize,
}

impl SeriesSpec {
    pub fn ordinary(num: Vec<Poly>, den: Vec<Rational>, arg: Poly, terms: usize) -> Self {
        SeriesSpec {
            numerator_params: num,
            denominator_params: den,
            argument: arg,
            kind: SeriesKind::Ordinary,
            terms,
        }
    }

    pub fn basic(num: Vec<Poly>, den: Vec<Rational>, q: Rational, arg: Poly, terms: usize) -> Self {
        SeriesSpec {
            numerator_params: num,
            denominator_params: den,
            argument: arg,
            kind: SeriesKind::Basic { q },
            terms,
        }
    }

    /// Exponent `1+s-r` of the basic-series sign/power factor. It is negative
    /// for `2φ0`, which the 0-Laguerre/Bessel family needs.
    fn excess(&self) -> i64 {
        1 + self.denominator_params.len() as i64 - self.numerator_params.len() as i64
    }

    fn validate(&self) -> Result<()> {
        let too_high = self
            .numerator_params
            .iter()
            .chain(std::iter::once(&self.argument))
            .any(|p| p.degree().unwrap_or(0) > 1);
        if too_high {
            return Err(Error::Unsupported(
                "series parameters must have degree at most 1".into(),
            ));
        }
        if let SeriesKind::Basic { q } = &self.kind {
            if q.is_zero() || q.is_one() {
                return Err(Error::InvalidParam("basic series needs q not in {0, 1}".into()));
            }
        }
        Ok(())
    }
}

/// Ratio `term_k / term_{k-1}` contributed by the scalar part of step `k`
/// (denominator parameters, `k` or `1-q^k`, and the basic-series factor).
fn scalar_step(spec: &SeriesSpec, k: usize) -> Result<Rational> {
    let km1 = int(k as i64 - 1);
    let mut den = Rational::one();
    let mut num = Rational::one();
    match &spec.kind {
        SeriesKind::Ordinary => {
            for b in &spec.denominator_params {
                den *= b + &km1;
            }
            den *= int(k as i64);
        }
        SeriesKind::Basic { q } => {
            let qk1 = pow(q, k as i64 - 1)?;
            for b in &spec.denominator_params {
                den *= Rational::one() - b * &qk1;
            }
            den *= Rational::one() - &qk1 * q;
            // ((-1)^k q^{C(k,2)}) / ((-1)^{k-1} q^{C(k-1,2)}) = -q^{k-1}
            num *= pow(&-qk1, spec.excess())?;
        }
    }
    if den.is_zero() {
        return Err(Error::Pole(format!("vanishing series denominator at k = {k}")));
    }
    Ok(num / den)
}

/// Polynomial factor `term_k / term_{k-1}` from the numerator parameters.
fn poly_step(spec: &SeriesSpec, k: usize) -> Result<Poly> {
    let mut acc = spec.argument.clone();
    for a in &spec.numerator_params {
        let f = match &spec.kind {
            SeriesKind::Ordinary => a + &Poly::constant(int(k as i64 - 1)),
            SeriesKind::Basic { q } => {
                &Poly::one() - &a.scale(&pow(q, k as i64 - 1)?)
            }
        };
        acc = &acc * &f;
    }
    Ok(acc)
}

/// Exact sum of a terminating (basic) hypergeometric series.
pub fn hyper_sum(spec: &SeriesSpec) -> Result<Poly> {
    spec.validate()?;
    let mut term = Poly::one();
    let mut sum = Poly::one();
    for k in 1..=spec.terms {
        let s = scalar_step(spec, k)?;
        term = (&term * &poly_step(spec, k)?).scale(&s);
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Independent scalar path: every term built from full (q-)Pochhammer
/// products rather than term ratios. Used to cross-check [`hyper_sum`].
pub fn hyper_sum_scalar(
    num: &[Rational],
    den: &[Rational],
    arg: &Rational,
    kind: &SeriesKind,
    terms: usize,
) -> Result<Rational> {
    let excess = 1 + den.len() as i64 - num.len() as i64;
    let mut sum = Rational::zero();
    for k in 0..=terms {
        let (mut t, d) = match kind {
            SeriesKind::Ordinary => (
                num.iter().map(|a| arith::pochhammer(a, k)).product::<Rational>(),
                den.iter().map(|b| arith::pochhammer(b, k)).product::<Rational>()
                    * arith::factorial(k),
            ),
            SeriesKind::Basic { q } => {
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                let tri = pow(q, (k * k.saturating_sub(1) / 2) as i64)?;
                (
                    num.iter().map(|a| arith::qpochhammer(a, q, k)).product::<Rational>()
                        * pow(&(sign * tri), excess)?,
                    den.iter().map(|b| arith::qpochhammer(b, q, k)).product::<Rational>()
                        * arith::qpochhammer(q, q, k),
                )
            }
        };
        t *= pow(arg, k as i64)?;
        sum += arith::div(&t, &d)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::poly::qpochhammer_poly;
    use proptest::prelude::*;

    #[test]
    fn laguerre_degree_one() {
        // 1F1(-1; 1; x) = 1 - x
        let s = SeriesSpec::ordinary(
            vec![Poly::constant(int(-1))],
            vec![int(1)],
            Poly::x(),
            1,
        );
        assert_eq!(hyper_sum(&s).unwrap(), Poly::linear(int(-1), int(1)));
    }

    #[test]
    fn zero_terms_is_one() {
        let s = SeriesSpec::basic(
            vec![Poly::x(), Poly::constant(rat(1, 3))],
            vec![rat(2, 5)],
            rat(7, 2),
            Poly::x(),
            0,
        );
        assert_eq!(hyper_sum(&s).unwrap(), Poly::one());
    }

    #[test]
    fn stieltjes_wigert_degree_one() {
        // 1φ1(q^-1; 0; q, -q^2 x) at q = 2 is 1 - 2x
        let q = int(2);
        let s = SeriesSpec::basic(
            vec![Poly::constant(rat(1, 2))],
            vec![int(0)],
            q,
            Poly::monomial(int(-4), 1),
            1,
        );
        assert_eq!(hyper_sum(&s).unwrap(), Poly::linear(int(-2), int(1)));
    }

    #[test]
    fn truncation_is_natural() {
        // (-n)_k = 0 for k > n, so summing further changes nothing
        for n in 0..6usize {
            let mk = |terms| {
                SeriesSpec::ordinary(
                    vec![Poly::constant(int(-(n as i64))), -&Poly::x()],
                    vec![rat(3, 7)],
                    Poly::constant(rat(-2, 5)),
                    terms,
                )
            };
            assert_eq!(hyper_sum(&mk(n)).unwrap(), hyper_sum(&mk(n + 5)).unwrap());
            let q = rat(5, 3);
            let qn = pow(&q, -(n as i64)).unwrap();
            for k in n + 1..n + 4 {
                assert!(arith::qpochhammer(&qn, &q, k).is_zero());
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let quad = Poly::monomial(int(1), 2);
        let s = SeriesSpec::ordinary(vec![quad], vec![], Poly::x(), 2);
        assert!(hyper_sum(&s).is_err());
        let s = SeriesSpec::basic(vec![Poly::x()], vec![], int(1), Poly::x(), 2);
        assert!(hyper_sum(&s).is_err());
        let s = SeriesSpec::ordinary(vec![Poly::x()], vec![int(-1)], Poly::x(), 3);
        assert!(matches!(hyper_sum(&s), Err(Error::Pole(_))));
    }

    #[test]
    fn qpoch_poly_in_series_matches_definition() {
        let q = rat(3, 2);
        assert_eq!(
            qpochhammer_poly(&Poly::x(), &q, 3).eval(&rat(2, 7)),
            arith::qpochhammer(&rat(2, 7), &q, 3)
        );
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=20).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn constant_series_match_scalar_path(
            num in proptest::collection::vec(arb_rat(), 0..3),
            den in proptest::collection::vec(arb_rat(), 0..3),
            arg in arb_rat(),
            q in arb_rat(),
            basic in any::<bool>(),
            terms in 0usize..6,
        ) {
            let kind = if basic {
                prop_assume!(q != int(0) && q != int(1) && q != int(-1));
                SeriesKind::Basic { q }
            } else {
                SeriesKind::Ordinary
            };
            let spec = SeriesSpec {
                numerator_params: num.iter().cloned().map(Poly::constant).collect(),
                denominator_params: den.clone(),
                argument: Poly::constant(arg.clone()),
                kind: kind.clone(),
                terms,
            };
            let fast = hyper_sum(&spec);
            let slow = hyper_sum_scalar(&num, &den, &arg, &kind, terms);
            match (fast, slow) {
                (Ok(p), Ok(v)) => prop_assert_eq!(p.eval(&int(0)), v),
                (Err(_), Err(_)) => {}
                (f, s) => prop_assert!(false, "paths disagree: {:?} vs {:?}", f, s),
            }
        }
    }
}
