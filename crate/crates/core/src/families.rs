//! The ten families of the Laguerre constellation: generators, recurrence
//! data, Pearson data, normalization values and parameter validity.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::arith::{
    div, factorial, fmt_rational, int, is_nonpositive_integer, pochhammer, pow, qpochhammer,
    recip, Rational, Symbol,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::series::{hyper_sum, SeriesSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    /// Laguerre
    L,
    /// Charlier
    C,
    /// Meixner
    M,
    /// big q-Laguerre
    BqL,
    /// q-Meixner (variable y = q^{-x})
    QM,
    /// little q-Laguerre
    LqL,
    /// q-Laguerre (parameter `alpha` holds t = q^alpha)
    QL,
    /// q-Charlier (variable y = q^{-x})
    QC,
    /// 0-Laguerre/Bessel
    ZLB,
    /// Stieltjes-Wigert
    SW,
}

use FamilyId::*;

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [L, C, M, BqL, QM, LqL, QL, QC, ZLB, SW];

    pub fn label(self) -> &'static str {
        match self {
            L => "L",
            C => "C",
            M => "M",
            BqL => "bqL",
            QM => "qM",
            LqL => "lqL",
            QL => "qL",
            QC => "qC",
            ZLB => "0LB",
            SW => "SW",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            L => "Laguerre",
            C => "Charlier",
            M => "Meixner",
            BqL => "big q-Laguerre",
            QM => "q-Meixner",
            LqL => "little q-Laguerre",
            QL => "q-Laguerre",
            QC => "q-Charlier",
            ZLB => "0-Laguerre/Bessel",
            SW => "Stieltjes-Wigert",
        }
    }

    pub fn params(self) -> &'static [Symbol] {
        use Symbol as S;
        match self {
            L => &[S::Alpha],
            C => &[S::A],
            M => &[S::Beta, S::C],
            BqL => &[S::A, S::B, S::Q],
            QM => &[S::B, S::C, S::Q],
            LqL => &[S::A, S::Q],
            QL => &[S::Alpha, S::Q],
            QC => &[S::A, S::Q],
            ZLB => &[S::A, S::Q],
            SW => &[S::Q],
        }
    }

    /// Name of the natural polynomial variable.
    pub fn variable(self) -> &'static str {
        match self {
            QM | QC => "y",
            _ => "x",
        }
    }

    pub fn is_q_family(self) -> bool {
        !matches!(self, L | C | M)
    }

    /// Number of normalizations that the recurrence table describes (two for Meixner).
    pub fn root_count(self) -> usize {
        if self == M {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "ZLB" {
            return Ok(ZLB);
        }
        FamilyId::ALL
            .into_iter()
            .find(|f| f.label() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.into(),
            })
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Exact assignment of rationals to parameter symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct ParamPoint(BTreeMap<Symbol, Rational>);

impl ParamPoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Symbol, Rational)>>(pairs: I) -> Self {
        ParamPoint(pairs.into_iter().collect())
    }

    pub fn get(&self, s: Symbol) -> Result<&Rational> {
        self.0
            .get(&s)
            .ok_or_else(|| Error::InvalidParam(format!("missing parameter '{s}'")))
    }

    pub fn set(&mut self, s: Symbol, v: Rational) {
        self.0.insert(s, v);
    }

    /// Copy with one symbol replaced.
    pub fn with(&self, s: Symbol, v: Rational) -> Self {
        let mut p = self.clone();
        p.set(s, v);
        p
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.0.contains_key(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &Rational)> {
        self.0.iter()
    }

    pub fn to_strings(&self) -> BTreeMap<String, String> {
        self.0
            .iter()
            .map(|(k, v)| (k.name().to_string(), fmt_rational(v)))
            .collect()
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

fn cst(r: Rational) -> Poly {
    Poly::constant(r)
}

/// Standard-normalization polynomial `p_n` of a family.
pub fn standard_poly(fam: FamilyId, n: usize, th: &ParamPoint) -> Result<Poly> {
    use Symbol as S;
    let nn = n as i64;
    let minus_n = cst(int(-nn));
    let x = Poly::x();
    let spec = match fam {
        L => {
            let al = th.get(S::Alpha)?;
            let one = Rational::one();
            let s = SeriesSpec::ordinary(vec![minus_n], vec![al + &one], x, n);
            let pref = div(&pochhammer(&(al + one), n), &factorial(n))?;
            return Ok(hyper_sum(&s)?.scale(&pref));
        }
        C => {
            let a = th.get(S::A)?;
            SeriesSpec::ordinary(vec![minus_n, -&x], vec![], cst(-recip(a)?), n)
        }
        M => {
            let beta = th.get(S::Beta)?;
            let c = th.get(S::C)?;
            let z = Rational::one() - recip(c)?;
            SeriesSpec::ordinary(vec![minus_n, -&x], vec![beta.clone()], cst(z), n)
        }
        BqL => {
            let (a, b, q) = (th.get(S::A)?, th.get(S::B)?, th.get(S::Q)?);
            SeriesSpec::basic(
                vec![cst(pow(q, -nn)?), Poly::zero(), x],
                vec![a * q, b * q],
                q.clone(),
                cst(q.clone()),
                n,
            )
        }
        QM => {
            let (b, c, q) = (th.get(S::B)?, th.get(S::C)?, th.get(S::Q)?);
            let z = -div(&pow(q, nn + 1)?, c)?;
            SeriesSpec::basic(vec![cst(pow(q, -nn)?), x], vec![b * q], q.clone(), cst(z), n)
        }
        LqL => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            SeriesSpec::basic(
                vec![cst(pow(q, -nn)?), Poly::zero()],
                vec![a * q],
                q.clone(),
                x.scale(q),
                n,
            )
        }
        QL => {
            let (t, q) = (th.get(S::Alpha)?, th.get(S::Q)?);
            let tq = t * q;
            let arg = x.scale(&-(pow(q, nn + 1)? * t));
            let s = SeriesSpec::basic(vec![cst(pow(q, -nn)?)], vec![tq.clone()], q.clone(), arg, n);
            let pref = div(&qpochhammer(&tq, q, n), &qpochhammer(q, q, n))?;
            return Ok(hyper_sum(&s)?.scale(&pref));
        }
        QC => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            let z = -div(&pow(q, nn + 1)?, a)?;
            SeriesSpec::basic(vec![cst(pow(q, -nn)?), x], vec![int(0)], q.clone(), cst(z), n)
        }
        ZLB => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            SeriesSpec::basic(
                vec![cst(pow(q, -nn)?), Poly::zero()],
                vec![],
                q.clone(),
                x.scale(&-recip(a)?),
                n,
            )
        }
        SW => {
            let q = th.get(S::Q)?;
            let arg = x.scale(&-pow(q, nn + 1)?);
            SeriesSpec::basic(vec![cst(pow(q, -nn)?)], vec![int(0)], q.clone(), arg, n)
        }
    };
    hyper_sum(&spec)
}

/// Standard polynomial with the convention `p_{-1} = 0`.
pub fn standard_poly_i(fam: FamilyId, n: i64, th: &ParamPoint) -> Result<Poly> {
    if n < 0 {
        Ok(Poly::zero())
    } else {
        standard_poly(fam, n as usize, th)
    }
}

/// Root `c` of φ or φ* (or of the normalization row in the recurrence table).
pub fn root_c(fam: FamilyId, root: usize, th: &ParamPoint) -> Result<Rational> {
    check_root_index(fam, root)?;
    Ok(match (fam, root) {
        (M, 1) => -th.get(Symbol::Beta)?.clone(),
        (BqL, _) => int(1),
        (QM, _) => th.get(Symbol::B)? * th.get(Symbol::Q)?,
        _ => int(0),
    })
}

fn check_root_index(fam: FamilyId, root: usize) -> Result<()> {
    if root < fam.root_count() {
        Ok(())
    } else {
        Err(Error::InvalidParam(format!(
            "family {fam} has {} normalization(s), got index {root}",
            fam.root_count()
        )))
    }
}

/// Closed form of `p_n(c)` for the standard normalization.
pub fn value_at_root(fam: FamilyId, root: usize, n: usize, th: &ParamPoint) -> Result<Rational> {
    use Symbol as S;
    check_root_index(fam, root)?;
    Ok(match (fam, root) {
        (L, _) => pochhammer(&(th.get(S::Alpha)? + int(1)), n) / factorial(n),
        (M, 1) => pow(th.get(S::C)?, -(n as i64))?,
        (QM, _) => {
            let q = th.get(S::Q)?;
            qpochhammer(&-div(q, th.get(S::C)?)?, q, n)
        }
        (QL, _) => {
            let (t, q) = (th.get(S::Alpha)?, th.get(S::Q)?);
            div(&qpochhammer(&(t * q), q, n), &qpochhammer(q, q, n))?
        }
        (QC, _) => {
            let q = th.get(S::Q)?;
            qpochhammer(&-div(q, th.get(S::A)?)?, q, n)
        }
        _ => int(1),
    })
}

/// `p_n` in the standard normalization, or divided by `p_n(c)` when
/// `normalized` (the sequence the recurrence table describes).
pub fn family_poly(
    fam: FamilyId,
    n: usize,
    th: &ParamPoint,
    normalized: bool,
) -> Result<Poly> {
    family_poly_root(fam, n, th, normalized, 0)
}

pub fn family_poly_root(
    fam: FamilyId,
    n: usize,
    th: &ParamPoint,
    normalized: bool,
    root: usize,
) -> Result<Poly> {
    let p = standard_poly(fam, n, th)?;
    if !normalized {
        return Ok(p);
    }
    let v = value_at_root(fam, root, n, th)?;
    Ok(p.scale(&recip(&v)?))
}

/// Recurrence-table coefficients `(α_n, β_n, γ_n)` for the first normalization.
pub fn recurrence_coeffs(
    fam: FamilyId,
    n: usize,
    th: &ParamPoint,
) -> Result<(Rational, Rational, Rational)> {
    recurrence_coeffs_root(fam, 0, n, th)
}

/// Recurrence-table coefficients for the given normalization (Meixner has two rows).
pub fn recurrence_coeffs_root(
    fam: FamilyId,
    root: usize,
    n: usize,
    th: &ParamPoint,
) -> Result<(Rational, Rational, Rational)> {
    use Symbol as S;
    check_root_index(fam, root)?;
    let nn = int(n as i64);
    let e = n as i64;
    let one = Rational::one();
    let qn = |q: &Rational, k: i64| pow(q, k);
    let (al, ga, total) = match (fam, root) {
        (L, _) => {
            let a = th.get(S::Alpha)?;
            (-(&nn + a + &one), -nn.clone(), int(0))
        }
        (C, _) => (-th.get(S::A)?.clone(), -nn.clone(), int(0)),
        (M, 0) => {
            let (b, c) = (th.get(S::Beta)?, th.get(S::C)?);
            let cm1 = c - &one;
            (div(&(c * (&nn + b)), &cm1)?, div(&nn, &cm1)?, int(0))
        }
        (M, _) => {
            let (b, c) = (th.get(S::Beta)?, th.get(S::C)?);
            let cm1 = c - &one;
            (div(&(&nn + b), &cm1)?, div(&(&nn * c), &cm1)?, -b.clone())
        }
        (BqL, _) => {
            let (a, b, q) = (th.get(S::A)?, th.get(S::B)?, th.get(S::Q)?);
            let q1 = qn(q, e + 1)?;
            (
                (&one - a * &q1) * (&one - b * &q1),
                a * b * &q1 * (qn(q, e)? - &one),
                int(1),
            )
        }
        (QM, _) => {
            let (b, c, q) = (th.get(S::B)?, th.get(S::C)?, th.get(S::Q)?);
            let q1 = qn(q, e + 1)?;
            let d = qn(q, 2 * e + 1)?;
            (
                div(&((c + &q1) * (b * &q1 - &one)), &d)?,
                div(&(c * q * (qn(q, e)? - &one)), &d)?,
                b * q,
            )
        }
        (LqL, _) => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            let qe = qn(q, e)?;
            (
                &qe * (a * qn(q, e + 1)? - &one),
                a * &qe * (&qe - &one),
                int(0),
            )
        }
        (QL, _) => {
            let (t, q) = (th.get(S::Alpha)?, th.get(S::Q)?);
            let d = t * qn(q, 2 * e + 1)?;
            (
                div(&(t * qn(q, e + 1)? - &one), &d)?,
                div(&(q * (qn(q, e)? - &one)), &d)?,
                int(0),
            )
        }
        (QC, _) => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            let d = qn(q, 2 * e + 1)?;
            (
                -div(&(a + qn(q, e + 1)?), &d)?,
                div(&(a * q * (qn(q, e)? - &one)), &d)?,
                int(0),
            )
        }
        (ZLB, _) => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            let qe = qn(q, e)?;
            (
                -(a * qn(q, 2 * e + 1)?),
                -(a * &qe * (&qe - &one)),
                int(0),
            )
        }
        (SW, _) => {
            let q = th.get(S::Q)?;
            let d = qn(q, 2 * e + 1)?;
            (-recip(&d)?, div(&(q * (qn(q, e)? - &one)), &d)?, int(0))
        }
    };
    // Every row other than L, C and the first Meixner row prints
    // β_n as (constant) − α_n − γ_n; the three explicit rows are taken verbatim.
    let be = match (fam, root) {
        (L, _) => &nn * int(2) + th.get(S::Alpha)? + &one,
        (C, _) => &nn + th.get(S::A)?,
        (M, 0) => {
            let (b, c) = (th.get(S::Beta)?, th.get(S::C)?);
            -div(&(&nn + c * (&nn + b)), &(c - &one))?
        }
        _ => total - &al - &ga,
    };
    Ok((al, be, ga))
}

/// `ρ_n = γ_n / α_{n-1}`, the ratio `d_n² / d_{n-1}²` of squared norms.
pub fn norm_ratio(fam: FamilyId, root: usize, n: usize, th: &ParamPoint) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidParam("norm ratio needs n >= 1".into()));
    }
    let (_, _, g) = recurrence_coeffs_root(fam, root, n, th)?;
    let (a, _, _) = recurrence_coeffs_root(fam, root, n - 1, th)?;
    div(&g, &a).map_err(|_| Error::Pole(format!("alpha_{} vanishes", n - 1)))
}

/// The squared norm `d_n²` as printed in the recurrence table, up to an `n`-independent
/// factor (Γ-function constants are dropped). Used only to compare the
/// printed column against [`norm_ratio`].
pub fn printed_norm_sq(fam: FamilyId, root: usize, n: usize, th: &ParamPoint) -> Result<Rational> {
    use Symbol as S;
    check_root_index(fam, root)?;
    let e = n as i64;
    let nf = factorial(n);
    Ok(match (fam, root) {
        (L, _) => div(&nf, &pochhammer(&(th.get(S::Alpha)? + int(1)), n))?,
        (C, _) => div(&nf, &pow(th.get(S::A)?, e)?)?,
        (M, 0) => div(&nf, &(pochhammer(th.get(S::Beta)?, n) * pow(th.get(S::C)?, e)?))?,
        (M, _) => div(&(nf * pow(th.get(S::C)?, e)?), &pochhammer(th.get(S::Beta)?, n))?,
        (BqL, _) => {
            let (a, b, q) = (th.get(S::A)?, th.get(S::B)?, th.get(S::Q)?);
            let qi = recip(q)?;
            let num = qpochhammer(&qi, &qi, n) * pow(q, e)?;
            let den = qpochhammer(&(recip(a)? * &qi), &qi, n) * qpochhammer(&(recip(b)? * &qi), &qi, n);
            div(&num, &den)?
        }
        (QM, _) => {
            let (b, c, q) = (th.get(S::B)?, th.get(S::C)?, th.get(S::Q)?);
            let den = qpochhammer(&(b * q), q, n) * qpochhammer(&-div(q, c)?, q, n) * pow(q, e)?;
            div(&qpochhammer(q, q, n), &den)?
        }
        (LqL, _) | (ZLB, _) => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            let num = qpochhammer(q, q, n) * pow(a, e)? * pow(q, e)?;
            div(&num, &qpochhammer(&(a * q), q, n))?
        }
        (QL, _) => {
            let (t, q) = (th.get(S::Alpha)?, th.get(S::Q)?);
            div(&qpochhammer(q, q, n), &(qpochhammer(&(t * q), q, n) * pow(q, e)?))?
        }
        (QC, _) => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            let den = qpochhammer(&-div(q, a)?, q, n) * pow(q, e)?;
            div(&qpochhammer(q, q, n), &den)?
        }
        (SW, _) => {
            let q = th.get(S::Q)?;
            div(&qpochhammer(q, q, n), &pow(q, e)?)?
        }
    })
}

/// Pearson polynomial φ where the paper states it.
pub fn pearson_phi(fam: FamilyId, th: &ParamPoint) -> Result<Option<Poly>> {
    use Symbol as S;
    let x = Poly::x();
    Ok(match fam {
        L | C | M => Some(x),
        BqL => {
            let (a, b, q) = (th.get(S::A)?, th.get(S::B)?, th.get(S::Q)?);
            Some(Poly::linear(int(1), -(a * q)) * Poly::linear(int(1), -(b * q)))
        }
        LqL => Some(Poly::from_coeffs(vec![int(0), int(1), int(-1)])),
        SW => Some(Poly::monomial(int(1), 2)),
        _ => None,
    })
}

/// Starred Pearson polynomial φ* where the paper states it.
pub fn pearson_phi_star(fam: FamilyId, th: &ParamPoint) -> Result<Option<Poly>> {
    use Symbol as S;
    Ok(match fam {
        L => Some(Poly::x()),
        C => Some(cst(th.get(S::A)?.clone())),
        M => {
            let (b, c) = (th.get(S::Beta)?, th.get(S::C)?);
            Some(Poly::linear(c.clone(), c * b))
        }
        BqL => {
            let (a, b, q) = (th.get(S::A)?, th.get(S::B)?, th.get(S::Q)?);
            let k = a * b * q;
            Some(Poly::linear(-k.clone(), k))
        }
        LqL => Some(Poly::linear(th.get(S::A)?.clone(), int(0))),
        SW => Some(Poly::x()),
        _ => None,
    })
}

/// ψ from the star-transformation rule: `φ* = φ + ψ` (discrete families),
/// `φ* = φ + (q-1) x ψ` (q-families). `None` when φ/φ* are not registered,
/// when the rule does not produce a polynomial (big q-Laguerre), or for
/// Laguerre, whose Pearson equation is differential and gives `ψ = α + 1 - x`.
pub fn pearson_psi(fam: FamilyId, th: &ParamPoint) -> Result<Option<Poly>> {
    if fam == L {
        return Ok(Some(Poly::linear(int(-1), th.get(Symbol::Alpha)? + int(1))));
    }
    let (Some(phi), Some(star)) = (pearson_phi(fam, th)?, pearson_phi_star(fam, th)?) else {
        return Ok(None);
    };
    let diff = &star - &phi;
    if !fam.is_q_family() {
        return Ok(Some(diff));
    }
    let q = th.get(Symbol::Q)?;
    let d = Poly::linear(q - int(1), int(0));
    Ok(diff.div_exact(&d).ok())
}

/// Degree-one Pearson polynomial (φ if linear, else φ*), if any.
pub fn linear_pearson(fam: FamilyId, th: &ParamPoint) -> Result<Option<Poly>> {
    for p in [pearson_phi(fam, th)?, pearson_phi_star(fam, th)?].into_iter().flatten() {
        if p.degree() == Some(1) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Check that `θ` avoids the pole set of `fam` for all indices up to `n_max`.
pub fn check_valid(fam: FamilyId, th: &ParamPoint, n_max: usize) -> Result<()> {
    use Symbol as S;
    for s in fam.params() {
        th.get(*s)?;
    }
    let pole = |what: &str| Err(Error::Pole(format!("{fam}: {what}")));
    let kmax = n_max as i64 + 2;
    // smallest k >= 1 with v q^k == 1, if any up to kmax
    let hits_q_power = |v: &Rational, q: &Rational| -> bool {
        let mut w = v.clone();
        (1..=kmax).any(|_| {
            w *= q;
            w.is_one()
        })
    };
    if fam.is_q_family() {
        let q = th.get(S::Q)?;
        if q.is_zero() || q.is_one() || *q == int(-1) {
            return pole("q in {0, 1, -1}");
        }
    }
    match fam {
        L => {
            if is_nonpositive_integer(&(th.get(S::Alpha)? + int(1))) {
                return pole("alpha is a negative integer");
            }
        }
        C => {
            if th.get(S::A)?.is_zero() {
                return pole("a = 0");
            }
        }
        M => {
            let (b, c) = (th.get(S::Beta)?, th.get(S::C)?);
            if c.is_zero() || c.is_one() {
                return pole("c in {0, 1}");
            }
            if is_nonpositive_integer(b) {
                return pole("beta is a nonpositive integer");
            }
        }
        BqL => {
            let q = th.get(S::Q)?;
            for s in [S::A, S::B] {
                let v = th.get(s)?;
                if v.is_zero() || hits_q_power(v, q) {
                    return pole("a or b is 0 or a power of 1/q");
                }
            }
        }
        QM => {
            let (b, c, q) = (th.get(S::B)?, th.get(S::C)?, th.get(S::Q)?);
            if b.is_zero() || hits_q_power(b, q) {
                return pole("b is 0 or a power of 1/q");
            }
            if c.is_zero() || hits_q_power(&-recip(c)?, q) {
                return pole("c is 0 or -q^k");
            }
        }
        LqL | ZLB => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            if a.is_zero() || hits_q_power(a, q) {
                return pole("a is 0 or a power of 1/q");
            }
        }
        QL => {
            let (t, q) = (th.get(S::Alpha)?, th.get(S::Q)?);
            if t.is_zero() || hits_q_power(t, q) {
                return pole("q^alpha is 0 or a power of 1/q");
            }
        }
        QC => {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            if a.is_zero() || hits_q_power(&-recip(a)?, q) {
                return pole("a is 0 or -q^k");
            }
        }
        SW => {}
    }
    Ok(())
}

/// Draw a rational with numerator and denominator bounded by `bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num.into(), den.into())
}

/// Draw a value for every symbol in `syms`.
pub fn random_point<R: Rng>(rng: &mut R, syms: &[Symbol], bound: i64) -> ParamPoint {
    ParamPoint::from_pairs(syms.iter().map(|&s| (s, random_rational(rng, bound))))
}

/// Rejection-sample a valid parameter point for `fam`.
pub fn sample_valid<R: Rng>(
    rng: &mut R,
    fam: FamilyId,
    n_max: usize,
    bound: i64,
) -> Result<ParamPoint> {
    for _ in 0..1000 {
        let th = random_point(rng, fam.params(), bound);
        if check_valid(fam, &th, n_max).is_ok() {
            return Ok(th);
        }
    }
    Err(Error::SamplingExhausted(format!("no valid point for {fam}")))
}

/// The four exact relations between families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// big q-Laguerre in base 1/q vs. q-Meixner
    BigQLaguerreQMeixner,
    /// little q-Laguerre in base 1/q vs. q-Laguerre
    LittleQLaguerreQLaguerre,
    /// q-Laguerre vs. q-Charlier
    QLaguerreQCharlier,
    /// Stieltjes-Wigert in base 1/q vs. 0-Laguerre/Bessel
    StieltjesWigertZeroLaguerre,
}

impl Relation {
    pub const ALL: [Relation; 4] = [
        Relation::BigQLaguerreQMeixner,
        Relation::LittleQLaguerreQLaguerre,
        Relation::QLaguerreQCharlier,
        Relation::StieltjesWigertZeroLaguerre,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Relation::BigQLaguerreQMeixner => "rel.bqL-qM",
            Relation::LittleQLaguerreQLaguerre => "rel.lqL-qL",
            Relation::QLaguerreQCharlier => "rel.qL-qC",
            Relation::StieltjesWigertZeroLaguerre => "rel.SW-0LB",
        }
    }

    pub fn families(self) -> (FamilyId, FamilyId) {
        match self {
            Relation::BigQLaguerreQMeixner => (BqL, QM),
            Relation::LittleQLaguerreQLaguerre => (LqL, QL),
            Relation::QLaguerreQCharlier => (QL, QC),
            Relation::StieltjesWigertZeroLaguerre => (SW, ZLB),
        }
    }

    /// Parameters the relation is stated in.
    pub fn params(self) -> &'static [Symbol] {
        use Symbol as S;
        match self {
            Relation::BigQLaguerreQMeixner => &[S::A, S::B, S::Q],
            Relation::LittleQLaguerreQLaguerre | Relation::QLaguerreQCharlier => &[S::Alpha, S::Q],
            Relation::StieltjesWigertZeroLaguerre => &[S::A, S::Q],
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Relation::BigQLaguerreQMeixner => {
                "p_n(x;a,b;1/q) = M_n(xq/a; 1/a, -b; q) / (q/b;q)_n"
            }
            Relation::LittleQLaguerreQLaguerre => {
                "p_n(x;q^alpha|1/q) = (q;q)_n/(q^{alpha+1};q)_n L_n^{(alpha)}(-x;q)"
            }
            Relation::QLaguerreQCharlier => {
                "L_n^{(alpha)}(x;q) = C_n(-x; -q^{-alpha}; q) / (q;q)_n"
            }
            Relation::StieltjesWigertZeroLaguerre => {
                "S_n(x/a; 1/q) = 2phi0(q^-n, 0; -; q, -x/a) = l_n(x;a)"
            }
        }
    }
}

/// How the little q-Laguerre parameter is read in the base-1/q relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QPowerReading {
    /// `q^alpha` evaluated in the original base q: parameter `t`.
    OriginalBase,
    /// `q^alpha` evaluated in the inverted base 1/q: parameter `1/t`.
    InvertedBase,
}

/// Both sides of a relation as polynomials in `x`.
pub fn related_poly(rel: Relation, n: usize, th: &ParamPoint) -> Result<(Poly, Poly)> {
    related_poly_with(rel, n, th, QPowerReading::OriginalBase)
}

pub fn related_poly_with(
    rel: Relation,
    n: usize,
    th: &ParamPoint,
    reading: QPowerReading,
) -> Result<(Poly, Poly)> {
    use Symbol as S;
    let q = th.get(S::Q)?;
    let qi = recip(q)?;
    match rel {
        Relation::BigQLaguerreQMeixner => {
            let (a, b) = (th.get(S::A)?, th.get(S::B)?);
            let lp = ParamPoint::from_pairs([(S::A, a.clone()), (S::B, b.clone()), (S::Q, qi)]);
            let lhs = standard_poly(BqL, n, &lp)?;
            let mp = ParamPoint::from_pairs([
                (S::B, recip(a)?),
                (S::C, -b.clone()),
                (S::Q, q.clone()),
            ]);
            let m = standard_poly(QM, n, &mp)?.subst_scale(&div(q, a)?);
            let rhs = m.scale(&recip(&qpochhammer(&div(q, b)?, q, n))?);
            Ok((lhs, rhs))
        }
        Relation::LittleQLaguerreQLaguerre => {
            let t = th.get(S::Alpha)?;
            let a = match reading {
                QPowerReading::OriginalBase => t.clone(),
                QPowerReading::InvertedBase => recip(t)?,
            };
            let lp = ParamPoint::from_pairs([(S::A, a), (S::Q, qi)]);
            let lhs = standard_poly(LqL, n, &lp)?;
            let ql = ParamPoint::from_pairs([(S::Alpha, t.clone()), (S::Q, q.clone())]);
            let pref = div(&qpochhammer(q, q, n), &qpochhammer(&(t * q), q, n))?;
            let rhs = standard_poly(QL, n, &ql)?.subst_scale(&int(-1)).scale(&pref);
            Ok((lhs, rhs))
        }
        Relation::QLaguerreQCharlier => {
            let t = th.get(S::Alpha)?;
            let ql = ParamPoint::from_pairs([(S::Alpha, t.clone()), (S::Q, q.clone())]);
            let lhs = standard_poly(QL, n, &ql)?;
            let cp = ParamPoint::from_pairs([(S::A, -recip(t)?), (S::Q, q.clone())]);
            let rhs = standard_poly(QC, n, &cp)?
                .subst_scale(&int(-1))
                .scale(&recip(&qpochhammer(q, q, n))?);
            Ok((lhs, rhs))
        }
        Relation::StieltjesWigertZeroLaguerre => {
            let a = th.get(S::A)?;
            let sp = ParamPoint::from_pairs([(S::Q, qi)]);
            let lhs = standard_poly(SW, n, &sp)?.subst_scale(&recip(a)?);
            let zp = ParamPoint::from_pairs([(S::A, a.clone()), (S::Q, q.clone())]);
            Ok((lhs, standard_poly(ZLB, n, &zp)?))
        }
    }
}

/// Check validity of every parameter point a relation touches.
pub fn check_relation_valid(rel: Relation, th: &ParamPoint, n_max: usize) -> Result<()> {
    use Symbol as S;
    let q = th.get(S::Q)?;
    let qi = recip(q)?;
    let (lhs, rhs): (Vec<(FamilyId, ParamPoint)>, Vec<(FamilyId, ParamPoint)>) = match rel {
        Relation::BigQLaguerreQMeixner => {
            let (a, b) = (th.get(S::A)?, th.get(S::B)?);
            if a.is_zero() || b.is_zero() {
                return Err(Error::Pole("a or b is 0".into()));
            }
            (
                vec![(BqL, ParamPoint::from_pairs([(S::A, a.clone()), (S::B, b.clone()), (S::Q, qi)]))],
                vec![(QM, ParamPoint::from_pairs([(S::B, recip(a)?), (S::C, -b.clone()), (S::Q, q.clone())]))],
            )
        }
        Relation::LittleQLaguerreQLaguerre => {
            let t = th.get(S::Alpha)?;
            if t.is_zero() {
                return Err(Error::Pole("q^alpha is 0".into()));
            }
            (
                vec![
                    (LqL, ParamPoint::from_pairs([(S::A, t.clone()), (S::Q, qi.clone())])),
                    (LqL, ParamPoint::from_pairs([(S::A, recip(t)?), (S::Q, qi)])),
                ],
                vec![(QL, ParamPoint::from_pairs([(S::Alpha, t.clone()), (S::Q, q.clone())]))],
            )
        }
        Relation::QLaguerreQCharlier => {
            let t = th.get(S::Alpha)?;
            if t.is_zero() {
                return Err(Error::Pole("q^alpha is 0".into()));
            }
            (
                vec![(QL, ParamPoint::from_pairs([(S::Alpha, t.clone()), (S::Q, q.clone())]))],
                vec![(QC, ParamPoint::from_pairs([(S::A, -recip(t)?), (S::Q, q.clone())]))],
            )
        }
        Relation::StieltjesWigertZeroLaguerre => {
            let a = th.get(S::A)?;
            (
                vec![(SW, ParamPoint::from_pairs([(S::Q, qi)]))],
                vec![(ZLB, ParamPoint::from_pairs([(S::A, a.clone()), (S::Q, q.clone())]))],
            )
        }
    };
    for (f, p) in lhs.iter().chain(rhs.iter()) {
        check_valid(*f, p, n_max)?;
    }
    // (q/b;q)_n and (q^{alpha+1};q)_n denominators
    match rel {
        Relation::BigQLaguerreQMeixner => {
            let b = th.get(S::B)?;
            if qpochhammer(&div(q, b)?, q, n_max + 1).is_zero() {
                return Err(Error::Pole("(q/b;q)_n vanishes".into()));
            }
        }
        Relation::LittleQLaguerreQLaguerre => {
            let t = th.get(S::Alpha)?;
            if qpochhammer(&(t * q), q, n_max + 1).is_zero() {
                return Err(Error::Pole("(tq;q)_n vanishes".into()));
            }
        }
        _ => {}
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Limit,
    ParticularCase,
}

#[derive(Debug, Clone, Serialize)]
pub struct Edge {
    pub from: FamilyId,
    pub to: FamilyId,
    pub kind: EdgeKind,
    pub bidirectional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<&'static str>,
}

/// Edges of the relation diagram between the ten families. Black arrows are
/// limits; gray ones are particular cases, four of which are the exact
/// relations verified by [`related_poly`].
pub fn relation_edges() -> Vec<Edge> {
    let lim = |from, to| Edge {
        from,
        to,
        kind: EdgeKind::Limit,
        bidirectional: false,
        relation: None,
    };
    let part = |from, to, bidirectional, relation| Edge {
        from,
        to,
        kind: EdgeKind::ParticularCase,
        bidirectional,
        relation,
    };
    vec![
        lim(BqL, L),
        lim(LqL, L),
        lim(QL, L),
        lim(QM, M),
        lim(LqL, C),
        lim(QL, C),
        lim(QC, C),
        lim(BqL, LqL),
        lim(QL, SW),
        lim(QC, SW),
        lim(M, L),
        lim(M, C),
        part(QC, QM, false, None),
        part(BqL, QM, true, Some("rel.bqL-qM")),
        part(LqL, QL, true, Some("rel.lqL-qL")),
        part(QL, QC, true, Some("rel.qL-qC")),
        part(ZLB, SW, true, Some("rel.SW-0LB")),
    ]
}

/// Recurrence-table rows rendered as strings for the registry dump.
pub fn table_formulas(fam: FamilyId, root: usize) -> [&'static str; 4] {
    match (fam, root) {
        (L, _) => ["-n-alpha-1", "2n+alpha+1", "-n", "n! Gamma(alpha+1)^2 / Gamma(n+alpha+1)"],
        (C, _) => ["-a", "n+a", "-n", "n!/a^n"],
        (M, 0) => [
            "c(n+beta)/(c-1)",
            "-(n+c(n+beta))/(c-1)",
            "n/(c-1)",
            "n! Gamma(beta) / (Gamma(beta+n) c^n)",
        ],
        (M, _) => [
            "(n+beta)/(c-1)",
            "-beta-alpha_n-gamma_n",
            "nc/(c-1)",
            "n! Gamma(beta) c^n / Gamma(beta+n)",
        ],
        (BqL, _) => [
            "(1-aq^{n+1})(1-bq^{n+1})",
            "1-alpha_n-gamma_n",
            "abq^{n+1}(q^n-1)",
            "(q^-1;q^-1)_n q^n / (a^-1 q^-1, b^-1 q^-1; q^-1)_n",
        ],
        (QM, _) => [
            "(c+q^{n+1})(bq^{n+1}-1)/q^{2n+1}",
            "bq-alpha_n-gamma_n",
            "cq(q^n-1)/q^{2n+1}",
            "(q;q)_n / ((bq,-q/c;q)_n q^n)",
        ],
        (LqL, _) => [
            "q^n(aq^{n+1}-1)",
            "-alpha_n-gamma_n",
            "aq^n(q^n-1)",
            "(q;q)_n a^n q^n / (aq;q)_n",
        ],
        (QL, _) => [
            "(q^{n+1+alpha}-1)/q^{2n+1+alpha}",
            "-alpha_n-gamma_n",
            "q(q^n-1)/q^{2n+alpha+1}",
            "(q;q)_n / ((q^{alpha+1};q)_n q^n)",
        ],
        (QC, _) => [
            "-(a+q^{n+1})/q^{2n+1}",
            "-alpha_n-gamma_n",
            "aq(q^n-1)/q^{2n+1}",
            "(q;q)_n / ((-q/a;q)_n q^n)",
        ],
        (ZLB, _) => [
            "-aq^{2n+1}",
            "-alpha_n-gamma_n",
            "-aq^n(q^n-1)",
            "(q;q)_n a^n q^n / (aq;q)_n",
        ],
        (SW, _) => [
            "-1/q^{2n+1}",
            "-alpha_n-gamma_n",
            "q(q^n-1)/q^{2n+1}",
            "(q;q)_n / q^n",
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pt(pairs: &[(Symbol, Rational)]) -> ParamPoint {
        ParamPoint::from_pairs(pairs.iter().cloned())
    }

    #[test]
    fn desk_examples() {
        let l = family_poly(L, 0, &pt(&[(Symbol::Alpha, rat(1, 2))]), false).unwrap();
        assert_eq!(l, Poly::one());
        let c = family_poly(C, 1, &pt(&[(Symbol::A, int(2))]), false).unwrap();
        assert_eq!(c, Poly::linear(rat(-1, 2), int(1)));
        let s = family_poly(SW, 1, &pt(&[(Symbol::Q, int(2))]), false).unwrap();
        assert_eq!(s, Poly::linear(int(-2), int(1)));
        let l2 = family_poly(L, 2, &pt(&[(Symbol::Alpha, int(0))]), true).unwrap();
        assert_eq!(l2.to_text("x"), "1 - 2x + 1/2 x^2");
    }

    #[test]
    fn table_lookups() {
        let r = recurrence_coeffs(L, 2, &pt(&[(Symbol::Alpha, int(1))])).unwrap();
        assert_eq!(r, (int(-4), int(6), int(-2)));
        let r = recurrence_coeffs(C, 0, &pt(&[(Symbol::A, int(3))])).unwrap();
        assert_eq!(r, (int(-3), int(3), int(0)));
        let r = recurrence_coeffs(SW, 1, &pt(&[(Symbol::Q, int(2))])).unwrap();
        assert_eq!(r, (rat(-1, 8), rat(-1, 8), rat(1, 4)));
        assert_eq!(norm_ratio(L, 0, 1, &pt(&[(Symbol::Alpha, int(0))])).unwrap(), int(1));
        assert_eq!(norm_ratio(C, 0, 1, &pt(&[(Symbol::A, int(2))])).unwrap(), rat(1, 2));
    }

    #[test]
    fn meixner_second_root_scales_by_c_power() {
        let th = pt(&[(Symbol::Beta, rat(5, 3)), (Symbol::C, rat(3, 7))]);
        for n in 0..6 {
            let p = standard_poly(M, n, &th).unwrap();
            let c2 = root_c(M, 1, &th).unwrap();
            assert_eq!(p.eval(&c2), value_at_root(M, 1, n, &th).unwrap());
        }
    }

    #[test]
    fn validity_rejects_poles() {
        assert!(check_valid(L, &pt(&[(Symbol::Alpha, int(-3))]), 5).is_err());
        assert!(check_valid(C, &pt(&[(Symbol::A, int(0))]), 5).is_err());
        let m = pt(&[(Symbol::Beta, int(2)), (Symbol::C, int(1))]);
        assert!(check_valid(M, &m, 5).is_err());
        let b = pt(&[(Symbol::A, rat(1, 4)), (Symbol::B, rat(1, 5)), (Symbol::Q, int(2))]);
        assert!(check_valid(BqL, &b, 5).is_err());
        let b = pt(&[(Symbol::A, rat(1, 3)), (Symbol::B, rat(1, 5)), (Symbol::Q, int(2))]);
        assert!(check_valid(BqL, &b, 5).is_ok());
        assert!(check_valid(SW, &pt(&[(Symbol::Q, int(-1))]), 5).is_err());
        assert!(check_valid(SW, &ParamPoint::new(), 5).is_err());
    }

    #[test]
    fn family_ids_parse() {
        for f in FamilyId::ALL {
            assert_eq!(f.label().parse::<FamilyId>().unwrap(), f);
        }
        assert_eq!("ZLB".parse::<FamilyId>().unwrap(), ZLB);
        assert!("Jacobi".parse::<FamilyId>().is_err());
    }

    #[test]
    fn pearson_psi_follows_star_rule() {
        let th = pt(&[(Symbol::Beta, rat(5, 3)), (Symbol::C, rat(3, 7))]);
        let psi = pearson_psi(M, &th).unwrap().unwrap();
        assert_eq!(psi, Poly::linear(rat(3, 7) - int(1), rat(5, 7)));
        let th = pt(&[(Symbol::A, rat(1, 3)), (Symbol::Q, int(2))]);
        let psi = pearson_psi(LqL, &th).unwrap().unwrap();
        assert_eq!(psi, Poly::linear(int(1), rat(-2, 3)));
        let th = pt(&[(Symbol::A, rat(1, 3)), (Symbol::B, rat(1, 5)), (Symbol::Q, int(2))]);
        assert!(pearson_psi(BqL, &th).unwrap().is_none());
    }

    #[test]
    fn relation_at_degree_zero() {
        let th = pt(&[(Symbol::A, rat(2, 3)), (Symbol::Q, rat(5, 2))]);
        let (l, r) = related_poly(Relation::StieltjesWigertZeroLaguerre, 0, &th).unwrap();
        assert_eq!((l, r), (Poly::one(), Poly::one()));
    }

    #[test]
    fn sampler_is_deterministic_and_valid() {
        for fam in FamilyId::ALL {
            let mut r1 = ChaCha8Rng::seed_from_u64(7);
            let mut r2 = ChaCha8Rng::seed_from_u64(7);
            let a = sample_valid(&mut r1, fam, 12, 40).unwrap();
            let b = sample_valid(&mut r2, fam, 12, 40).unwrap();
            assert_eq!(a, b);
            assert!(check_valid(fam, &a, 12).is_ok());
        }
    }

    /// The printed squared-norm column agrees with ρ_n = γ_n/α_{n-1} on every
    /// row except 0-Laguerre/Bessel, whose printed entry is the little
    /// q-Laguerre one.
    #[test]
    fn printed_norms_match_ratio_except_zero_laguerre() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for fam in FamilyId::ALL {
            for r in 0..fam.root_count() {
                let th = sample_valid(&mut rng, fam, 10, 20).unwrap();
                let agree = (1..6).all(|n| {
                    let printed = printed_norm_sq(fam, r, n, &th).unwrap()
                        / printed_norm_sq(fam, r, n - 1, &th).unwrap();
                    printed == norm_ratio(fam, r, n, &th).unwrap()
                });
                assert_eq!(agree, fam != ZLB, "{fam}#{r}");
            }
        }
    }
}
