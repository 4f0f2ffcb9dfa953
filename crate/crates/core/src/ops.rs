//! Operators on indexed polynomial sequences `(m, θ) ↦ p_m(x; θ)`.
//!
//! Index operators act on `m`; parameter operators act on one symbol of `θ`
//! by regenerating the sequence at exactly shifted parameter values.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{binomial, div, int, Rational, Symbol};
use crate::error::{Error, Result};
use crate::families::ParamPoint;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqOperator {
    /// `f(m+1) - f(m)`
    DeltaN,
    /// `f(m) - f(m-1)`, with `f(-1) = 0` supplied by the base sequence
    NablaN,
    /// `f(s+1) - f(s)`
    DeltaParam(Symbol),
    /// `f(s) - f(s-1)`
    NablaParam(Symbol),
    /// `(f(qs) - f(s)) / (s(q-1))`
    QDiffParam(Symbol),
    /// `(f(s/q) - f(s)) / (s(1/q-1))`
    InvQDiffParam(Symbol),
    /// plain forward q-difference `f(qs) - f(s)`
    QForwardParam(Symbol),
    /// plain backward q-difference `f(s) - f(s/q)`
    QBackwardParam(Symbol),
    /// `∂/∂s`, for sequences polynomial in `s` of degree at most the bound
    DerivParam(Symbol, usize),
}

type SeqFn = dyn Fn(i64, &ParamPoint) -> Result<Poly> + Send + Sync;

/// An indexed, parameter-dependent polynomial sequence.
#[derive(Clone)]
pub struct Seq(Arc<SeqFn>);

impl Seq {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(i64, &ParamPoint) -> Result<Poly> + Send + Sync + 'static,
    {
        Seq(Arc::new(f))
    }

    pub fn at(&self, m: i64, th: &ParamPoint) -> Result<Poly> {
        (self.0)(m, th)
    }

    pub fn apply(&self, op: SeqOperator) -> Seq {
        let f = self.clone();
        match op {
            SeqOperator::DeltaN => Seq::new(move |m, th| Ok(f.at(m + 1, th)? - f.at(m, th)?)),
            SeqOperator::NablaN => Seq::new(move |m, th| Ok(f.at(m, th)? - f.at(m - 1, th)?)),
            SeqOperator::DeltaParam(s) => Seq::new(move |m, th| {
                let v = th.get(s)?;
                Ok(f.at(m, &th.with(s, v + int(1)))? - f.at(m, th)?)
            }),
            SeqOperator::NablaParam(s) => Seq::new(move |m, th| {
                let v = th.get(s)?;
                Ok(f.at(m, th)? - f.at(m, &th.with(s, v - int(1)))?)
            }),
            SeqOperator::QDiffParam(s) => Seq::new(move |m, th| {
                let (v, q) = (th.get(s)?, th.get(Symbol::Q)?);
                let d = f.at(m, &th.with(s, v * q))? - f.at(m, th)?;
                Ok(d.scale(&div(&int(1), &(v * (q - int(1))))?))
            }),
            SeqOperator::InvQDiffParam(s) => Seq::new(move |m, th| {
                let (v, q) = (th.get(s)?, th.get(Symbol::Q)?);
                let qi = div(&int(1), q)?;
                let d = f.at(m, &th.with(s, v * &qi))? - f.at(m, th)?;
                Ok(d.scale(&div(&int(1), &(v * (qi - int(1))))?))
            }),
            SeqOperator::QForwardParam(s) => Seq::new(move |m, th| {
                let (v, q) = (th.get(s)?, th.get(Symbol::Q)?);
                Ok(f.at(m, &th.with(s, v * q))? - f.at(m, th)?)
            }),
            SeqOperator::QBackwardParam(s) => Seq::new(move |m, th| {
                let (v, q) = (th.get(s)?, th.get(Symbol::Q)?);
                Ok(f.at(m, th)? - f.at(m, &th.with(s, div(v, q)?))?)
            }),
            SeqOperator::DerivParam(s, deg) => Seq::new(move |m, th| {
                let jet = ParamJet::interpolate(s, deg, th, |p| f.at(m, p))?;
                Ok(jet.derivative().value())
            }),
        }
    }

    /// Apply `op` `k` times.
    pub fn apply_pow(&self, op: SeqOperator, k: usize) -> Seq {
        (0..k).fold(self.clone(), |s, _| s.apply(op))
    }

    /// Multiply by a scalar depending on index and parameters.
    pub fn times<F>(&self, g: F) -> Seq
    where
        F: Fn(i64, &ParamPoint) -> Result<Rational> + Send + Sync + 'static,
    {
        let f = self.clone();
        Seq::new(move |m, th| Ok(f.at(m, th)?.scale(&g(m, th)?)))
    }

    /// Reindex: `m ↦ f(m + d)`.
    pub fn shift(&self, d: i64) -> Seq {
        let f = self.clone();
        Seq::new(move |m, th| f.at(m + d, th))
    }
}

/// `Σ_j (-1)^{k-j} C(k,j) f(m+j)`, i.e. `(Δ^k f)(m)`.
pub fn delta_pow<F: Fn(i64) -> Result<Poly>>(k: usize, m: i64, f: F) -> Result<Poly> {
    let mut acc = Poly::zero();
    for j in 0..=k {
        let sign = if (k - j).is_multiple_of(2) { int(1) } else { int(-1) };
        acc = acc + f(m + j as i64)?.scale(&(sign * binomial(k, j)));
    }
    Ok(acc)
}

/// `Σ_j (-1)^j C(k,j) f(m-j)`, i.e. `(∇^k f)(m)`.
pub fn nabla_pow<F: Fn(i64) -> Result<Poly>>(k: usize, m: i64, f: F) -> Result<Poly> {
    let mut acc = Poly::zero();
    for j in 0..=k {
        let sign = if j % 2 == 0 { int(1) } else { int(-1) };
        acc = acc + f(m - j as i64)?.scale(&(sign * binomial(k, j)));
    }
    Ok(acc)
}

/// A polynomial in one parameter `s` around a centre `s0`, with polynomial
/// (in `x`) coefficients: `Σ_r coeffs[r] (s - s0)^r`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamJet {
    pub coeffs: Vec<Poly>,
}

impl ParamJet {
    /// Recover the `s`-dependence of `f` by Lagrange interpolation through
    /// `deg + 1` exact nodes `s0, s0+1, ...` (skipping poles), and confirm
    /// the degree bound at one extra node.
    pub fn interpolate<F>(s: Symbol, deg: usize, th: &ParamPoint, f: F) -> Result<Self>
    where
        F: Fn(&ParamPoint) -> Result<Poly>,
    {
        let s0 = th.get(s)?.clone();
        let mut nodes: Vec<(Rational, Poly)> = Vec::with_capacity(deg + 2);
        let mut offset = 0i64;
        while nodes.len() < deg + 2 {
            if offset > 4 * deg as i64 + 20 {
                return Err(Error::Pole("too many poles among interpolation nodes".into()));
            }
            let u = int(offset);
            match f(&th.with(s, &s0 + &u)) {
                Ok(p) => nodes.push((u, p)),
                Err(Error::Pole(e)) if offset > 0 => {
                    let _ = e;
                }
                Err(e) => return Err(e),
            }
            offset += 1;
        }
        let check = nodes.pop().expect("deg + 2 nodes");
        let mut coeffs = vec![Poly::zero(); deg + 1];
        for (j, (uj, yj)) in nodes.iter().enumerate() {
            // ℓ_j(u) = Π_{i≠j} (u - u_i)/(u_j - u_i), built in the monomial basis
            let mut basis = Poly::one();
            let mut denom = Rational::one();
            for (i, (ui, _)) in nodes.iter().enumerate() {
                if i != j {
                    basis = basis * Poly::linear(int(1), -ui.clone());
                    denom *= uj - ui;
                }
            }
            let basis = basis.scale(&(Rational::one() / denom));
            for (r, c) in basis.coeffs().iter().enumerate() {
                coeffs[r] = &coeffs[r] + &yj.scale(c);
            }
        }
        let jet = ParamJet { coeffs };
        if jet.eval(&check.0) != check.1 {
            return Err(Error::Unsupported(format!(
                "dependence on '{s}' exceeds the degree bound {deg}"
            )));
        }
        Ok(jet)
    }

    /// Value at offset `u` from the centre.
    pub fn eval(&self, u: &Rational) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| acc.scale(u) + c)
    }

    /// Value at the centre.
    pub fn value(&self) -> Poly {
        self.coeffs.first().cloned().unwrap_or_else(Poly::zero)
    }

    pub fn derivative(&self) -> Self {
        ParamJet {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(r, c)| c.scale(&int(r as i64)))
                .collect(),
        }
    }

    /// Multiply by `a + b (s - s0)`.
    pub fn mul_linear(&self, a: &Rational, b: &Rational) -> Self {
        let mut coeffs = vec![Poly::zero(); self.coeffs.len() + 1];
        for (r, c) in self.coeffs.iter().enumerate() {
            coeffs[r] = &coeffs[r] + &c.scale(a);
            coeffs[r + 1] = &coeffs[r + 1] + &c.scale(b);
        }
        ParamJet { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }
}

/// First-order linear differential operator algebra `Σ c_j(x) D^j`, used to
/// compose derivative identities mechanically.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffOp {
    pub coeffs: Vec<Poly>,
}

impl DiffOp {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        let mut d = DiffOp { coeffs };
        d.trim();
        d
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Poly::is_zero) {
            self.coeffs.pop();
        }
    }

    /// `self ∘ other`, using `D ∘ p = p' + p D`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out: Vec<Poly> = Vec::new();
        let add = |out: &mut Vec<Poly>, j: usize, p: Poly| {
            if out.len() <= j {
                out.resize(j + 1, Poly::zero());
            }
            out[j] = &out[j] + &p;
        };
        for (i, a) in self.coeffs.iter().enumerate() {
            // a D^i ∘ b D^j = a Σ_t C(i,t) b^{(t)} D^{i-t+j}
            for (j, b) in other.coeffs.iter().enumerate() {
                let mut bt = b.clone();
                for t in 0..=i {
                    let c = binomial(i, t);
                    add(&mut out, i - t + j, (a * &bt).scale(&c));
                    bt = bt.derivative();
                }
            }
        }
        DiffOp::new(out)
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero();
        let mut d = p.clone();
        for c in &self.coeffs {
            acc = acc + c * &d;
            d = d.derivative();
        }
        acc
    }
}

/// Pole-aware `1/r` as a convenience for identity code.
pub fn inv(r: &Rational) -> Result<Rational> {
    if r.is_zero() {
        Err(Error::Pole("reciprocal of zero".into()))
    } else {
        Ok(r.recip())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn lin_seq() -> Seq {
        // p_m(x; a) = (a x + 1)^m, zero for m < 0
        Seq::new(|m, th| {
            if m < 0 {
                return Ok(Poly::zero());
            }
            let a = th.get(Symbol::A)?;
            Ok(Poly::linear(a.clone(), int(1)).pow(m as usize))
        })
    }

    fn pt(a: Rational) -> ParamPoint {
        ParamPoint::from_pairs([(Symbol::A, a), (Symbol::Q, rat(5, 2))])
    }

    #[test]
    fn index_operators_follow_definitions() {
        let s = lin_seq();
        let th = pt(rat(2, 3));
        let d = s.apply(SeqOperator::DeltaN).at(2, &th).unwrap();
        assert_eq!(d, s.at(3, &th).unwrap() - s.at(2, &th).unwrap());
        let n0 = s.apply(SeqOperator::NablaN).at(0, &th).unwrap();
        assert_eq!(n0, Poly::one());
        let d3 = s.apply_pow(SeqOperator::DeltaN, 3).at(1, &th).unwrap();
        assert_eq!(d3, delta_pow(3, 1, |m| s.at(m, &th)).unwrap());
        let n3 = s.apply_pow(SeqOperator::NablaN, 3).at(4, &th).unwrap();
        assert_eq!(n3, nabla_pow(3, 4, |m| s.at(m, &th)).unwrap());
    }

    #[test]
    fn parameter_operators_follow_definitions() {
        let s = lin_seq();
        let th = pt(rat(2, 3));
        let q = rat(5, 2);
        let a = rat(2, 3);
        let at = |v: Rational| s.at(2, &pt(v)).unwrap();
        let got = s.apply(SeqOperator::QDiffParam(Symbol::A)).at(2, &th).unwrap();
        let want = (at(&a * &q) - at(a.clone())).scale(&(int(1) / (&a * (&q - int(1)))));
        assert_eq!(got, want);
        let got = s.apply(SeqOperator::InvQDiffParam(Symbol::A)).at(2, &th).unwrap();
        let qi = int(1) / &q;
        let want = (at(&a * &qi) - at(a.clone())).scale(&(int(1) / (&a * (&qi - int(1)))));
        assert_eq!(got, want);
        let got = s.apply(SeqOperator::NablaParam(Symbol::A)).at(2, &th).unwrap();
        assert_eq!(got, at(a.clone()) - at(&a - int(1)));
    }

    #[test]
    fn derivative_by_interpolation() {
        // d/da (a x + 1)^3 = 3 x (a x + 1)^2
        let s = lin_seq().apply(SeqOperator::DerivParam(Symbol::A, 3));
        let a = rat(-4, 9);
        let got = s.at(3, &pt(a.clone())).unwrap();
        let want = Poly::linear(a, int(1)).pow(2) * Poly::monomial(int(3), 1);
        assert_eq!(got, want);
        // a degree bound that is too small is detected
        let bad = lin_seq().apply(SeqOperator::DerivParam(Symbol::A, 2));
        assert!(bad.at(3, &pt(rat(1, 2))).is_err());
    }

    #[test]
    fn jet_algebra() {
        let th = pt(rat(3, 4));
        let jet = ParamJet::interpolate(Symbol::A, 2, &th, |p| lin_seq().at(2, p)).unwrap();
        assert_eq!(jet.value(), lin_seq().at(2, &th).unwrap());
        let twice = jet.derivative().derivative().value();
        assert_eq!(twice, Poly::monomial(int(2), 2));
        let m = jet.mul_linear(&int(0), &int(1));
        assert_eq!(m.value(), Poly::zero());
        assert_eq!(m.derivative().value(), jet.value());
    }

    #[test]
    fn differential_operator_composition() {
        // (1 - D)∘(1 - D) = 1 - 2D + D^2
        let t = DiffOp::new(vec![Poly::one(), Poly::constant(int(-1))]);
        let tt = t.compose(&t);
        assert_eq!(
            tt.coeffs,
            vec![Poly::one(), Poly::constant(int(-2)), Poly::one()]
        );
        // D ∘ x = 1 + x D
        let d = DiffOp::new(vec![Poly::zero(), Poly::one()]);
        let xop = DiffOp::new(vec![Poly::x()]);
        assert_eq!(d.compose(&xop).coeffs, vec![Poly::one(), Poly::x()]);
        let p = Poly::from_coeffs(vec![rat(1, 2), int(3), int(-1), rat(2, 7)]);
        assert_eq!(tt.apply(&p), t.apply(&t.apply(&p)));
    }
}
