//! Exact rational arithmetic and shifted factorials.
//!
//! Everything in this crate is computed over [`Rational`], an arbitrary
//! precision fraction that `num-rational` keeps in lowest terms with a
//! positive denominator after every operation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a rational. Panics on a zero denominator (programmer error).
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator in rat()");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"22/7"`, `"-7"` or `"0"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Render as `num/den`, omitting the denominator when it is 1.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Checked division: a zero divisor is reported as a pole of the current
/// parameter point rather than panicking.
pub fn div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        Err(Error::Pole("division by zero".into()))
    } else {
        Ok(a / b)
    }
}

/// Reciprocal with the same pole semantics as [`div`].
pub fn recip(a: &Rational) -> Result<Rational> {
    div(&Rational::one(), a)
}

/// Integer power allowing negative exponents (`0^-k` is a pole).
pub fn pow(base: &Rational, e: i64) -> Result<Rational> {
    if e >= 0 {
        Ok(num_traits::pow(base.clone(), e as usize))
    } else {
        recip(&num_traits::pow(base.clone(), (-e) as usize))
    }
}

/// Rising factorial `(a)_n = a(a+1)...(a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = a.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

/// q-shifted factorial `(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})`.
pub fn qpochhammer(a: &Rational, q: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = a.clone();
    for _ in 0..n {
        acc *= Rational::one() - &f;
        f *= q;
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// Binomial coefficient `C(n, k)` for nonnegative integers.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    pochhammer(&int((n - k + 1) as i64), k) / factorial(k)
}

/// Whether `r` is a nonpositive integer (a pole of `1/(r)_k` for large k).
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// Parameter symbols shared by the ten families.
///
/// For the q-Laguerre family the symbol `Alpha` carries `t = q^alpha`, an
/// independent rational, so no irrational powers ever appear.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    Alpha,
    A,
    B,
    Beta,
    C,
    Q,
}

impl Symbol {
    pub const ALL: [Symbol; 6] = [
        Symbol::Alpha,
        Symbol::A,
        Symbol::B,
        Symbol::Beta,
        Symbol::C,
        Symbol::Q,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Alpha => "alpha",
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::Beta => "beta",
            Symbol::C => "c",
            Symbol::Q => "q",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown parameter symbol '{s}'")))
    }
}

/// A named exact parameter value, e.g. `beta=5/3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamValue {
    pub name: Symbol,
    pub value: Rational,
}

impl FromStr for ParamValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (name, value) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected sym=rational, got '{s}'")))?;
        Ok(ParamValue {
            name: name.trim().parse()?,
            value: parse_rational(value)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
        assert_eq!(pochhammer(&int(2), 3), int(24));
    }

    #[test]
    fn qpochhammer_examples() {
        assert_eq!(qpochhammer(&rat(1, 5), &int(3), 0), int(1));
        assert_eq!(qpochhammer(&int(1), &rat(2, 7), 3), int(0));
        assert_eq!(qpochhammer(&int(2), &int(2), 2), int(3));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("22/7").unwrap(), rat(22, 7));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(fmt_rational(&int(5)), "5");
    }

    #[test]
    fn param_value_parses() {
        let p: ParamValue = "beta=5/3".parse().unwrap();
        assert_eq!(p.name, Symbol::Beta);
        assert_eq!(p.value, rat(5, 3));
        assert!("gamma=1".parse::<ParamValue>().is_err());
        assert!("alpha".parse::<ParamValue>().is_err());
    }

    #[test]
    fn negative_powers_and_poles() {
        assert_eq!(pow(&int(2), -3).unwrap(), rat(1, 8));
        assert!(pow(&int(0), -1).is_err());
        assert!(div(&int(1), &int(0)).is_err());
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=40).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_splits(a in small_rat(), m in 0usize..=20, n in 0usize..=20) {
            let lhs = pochhammer(&a, m + n);
            let rhs = pochhammer(&a, m) * pochhammer(&(a.clone() + int(m as i64)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn qpochhammer_splits(a in small_rat(), q in small_rat(), m in 0usize..=20, n in 0usize..=20) {
            let lhs = qpochhammer(&a, &q, m + n);
            let shifted = a.clone() * num_traits::pow(q.clone(), m);
            let rhs = qpochhammer(&a, &q, m) * qpochhammer(&shifted, &q, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn addition_is_order_independent(a in small_rat(), b in small_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(fmt_rational(&(&a + &b)), fmt_rational(&(&b + &a)));
        }

        #[test]
        fn format_parse_roundtrip(a in small_rat()) {
            prop_assert_eq!(parse_rational(&fmt_rational(&a)).unwrap(), a);
        }
    }
}
