//! The identity registry.
//!
//! Each entry builds both sides of an identity as exact polynomials at one
//! grid point. Where the statement as printed does not hold, the entry
//! carries an erratum: a note, and when one could be derived, a corrected
//! reading that is verified alongside.

use std::sync::OnceLock;

use crate::arith::{factorial, int, pochhammer, pow, qpochhammer, recip, Rational, Symbol as S};
use crate::engine::{Ctx, Eqs, Erratum, Group, Identity, Reading, Sampler};
use crate::error::{Error, Result};
use crate::families::{
    recurrence_coeffs, related_poly_with, standard_poly_i, FamilyId, FamilyId::*, ParamPoint,
    QPowerReading, Relation,
};
use crate::lc::{self, SlForm, SlPlacement, LINEAR_PEARSON_VARIANTS};
use crate::ops::{delta_pow, nabla_pow, DiffOp, ParamJet, Seq, SeqOperator as Op};
use crate::poly::{pochhammer_poly, qpochhammer_poly, Poly};

// ---------------------------------------------------------------- helpers

fn eq(l: Poly, r: Poly) -> Result<Eqs> {
    Ok(vec![(l, r)])
}

fn x() -> Poly {
    Poly::x()
}

fn k(r: Rational) -> Poly {
    Poly::constant(r)
}

fn xk(e: usize) -> Poly {
    Poly::monomial(int(1), e)
}

/// `p(x + t)`
fn shift(p: &Poly, t: i64) -> Poly {
    p.subst_affine_scale(&int(1), &int(t))
}

/// `p(s x)`
fn dilate(p: &Poly, s: &Rational) -> Poly {
    p.subst_scale(s)
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn lag(m: i64, al: &Rational) -> Result<Poly> {
    standard_poly_i(L, m, &ParamPoint::from_pairs([(S::Alpha, al.clone())]))
}

fn ch(m: i64, a: &Rational) -> Result<Poly> {
    standard_poly_i(C, m, &ParamPoint::from_pairs([(S::A, a.clone())]))
}

fn mx(m: i64, b: &Rational, c: &Rational) -> Result<Poly> {
    standard_poly_i(M, m, &ParamPoint::from_pairs([(S::Beta, b.clone()), (S::C, c.clone())]))
}

/// `c^m (β)_m M_m(x; β, c)`
fn wm(m: i64, b: &Rational, c: &Rational) -> Result<Poly> {
    if m < 0 {
        return Ok(Poly::zero());
    }
    let s = pow(c, m)? * pochhammer(b, m as usize);
    Ok(mx(m, b, c)?.scale(&s))
}

fn bq(m: i64, a: &Rational, b: &Rational, q: &Rational) -> Result<Poly> {
    standard_poly_i(
        BqL,
        m,
        &ParamPoint::from_pairs([(S::A, a.clone()), (S::B, b.clone()), (S::Q, q.clone())]),
    )
}

fn lq(m: i64, a: &Rational, q: &Rational) -> Result<Poly> {
    standard_poly_i(LqL, m, &ParamPoint::from_pairs([(S::A, a.clone()), (S::Q, q.clone())]))
}

fn sw(m: i64, q: &Rational) -> Result<Poly> {
    standard_poly_i(SW, m, &ParamPoint::from_pairs([(S::Q, q.clone())]))
}

fn qpow(q: &Rational, e: i64) -> Result<Rational> {
    pow(q, e)
}

/// Index sequence `m ↦ p_m` of one family at the grid point's parameters.
fn index_seq(fam: FamilyId) -> Seq {
    Seq::new(move |m, th| standard_poly_i(fam, m, th))
}

/// Parameter sequence: `θ ↦ p_n(x; θ)` for fixed `n`.
fn param_seq(fam: FamilyId, n: i64) -> Seq {
    Seq::new(move |_, th| standard_poly_i(fam, n, th))
}

// ---------------------------------------------------------------- Laguerre

fn l_lownl(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    eq(lag(n, &a)? - lag(n - 1, &a)?, lag(n, &(&a - int(1)))?)
}

fn l_raiupnl(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let l = lag(n, &a)?;
    let lhs = l.scale(&a) - (lag(n + 1, &a)? - &l).scale(&int(n + 1));
    eq(lhs, x() * lag(n, &(&a + int(1)))?)
}

fn l_raidonl(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let l = lag(n, &a)?;
    let lhs = l.scale(&a) - (&l - lag(n - 1, &a)?).scale(&(int(n) + &a));
    eq(lhs, x() * lag(n - 1, &(&a + int(1)))?)
}

fn l_lowal(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    eq(lag(n, &a)? - lag(n, &(&a - int(1)))?, lag(n - 1, &a)?)
}

fn l_raidoal(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let l = lag(n, &a)?;
    let lhs = (k(int(n) + &a) - x()) * &l - (&l - lag(n, &(&a - int(1)))?).scale(&(&a + int(n)));
    eq(lhs, lag(n + 1, &(&a - int(1)))?.scale(&int(n + 1)))
}

fn l_raiupal(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let l = lag(n, &a)?;
    let lhs = (k(int(n + 1) + &a) - x()) * &l - x() * (lag(n, &(&a + int(1)))? - &l);
    eq(lhs, lag(n + 1, &a)?.scale(&int(n + 1)))
}

/// `F_0(b) = L_{n+k}^{(b)} / (b + s)_{n+k}`, `F_j(b) = (b+j)(b+j-1) ∇_b F_{j-1}(b)`,
/// with `s = 0` as printed and `s = 1` in the corrected reading.
fn lalrf(c: &Ctx, s: i64) -> Result<Eqs> {
    let (n, kk, a) = (c.n, c.k, c.p(S::Alpha)?);
    let nk = n + kk;
    let mut seq = Seq::new(move |_, th| {
        let b = th.get(S::Alpha)?;
        Ok(lag(nk as i64, b)?.scale(&recip(&pochhammer(&(b + int(s)), nk))?))
    });
    for j in 1..=kk as i64 {
        seq = seq
            .apply(Op::NablaParam(S::Alpha))
            .times(move |_, th| {
                let b = th.get(S::Alpha)?;
                Ok((b + int(j)) * (b + int(j - 1)))
            });
    }
    let rhs = seq.at(c.ni(), &c.th)?.scale(&pochhammer(&(&a + int(c.ki() + s)), n));
    eq(xk(kk) * lag(c.ni(), &(&a + int(c.ki())))?, rhs)
}

fn l_lalrf(c: &Ctx) -> Result<Eqs> {
    lalrf(c, 0)
}

fn l_lalrf_fixed(c: &Ctx) -> Result<Eqs> {
    lalrf(c, 1)
}

/// Single step: `n!/(α+k+1)_n L_n^{(α+k)} = (α+k)(α+k-1)/(x(n+1)) ∇_α [(n+1)!/(α+k)_{n+1} L_{n+1}^{(α+k-1)}]`.
fn l_lalrf_step(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.n, c.ki(), c.p(S::Alpha)?);
    let h = |b: &Rational| -> Result<Poly> {
        let pre = factorial(n + 1) * recip(&pochhammer(&(b + int(kk)), n + 1))?;
        Ok(lag(c.ni() + 1, &(b + int(kk - 1)))?.scale(&pre))
    };
    let lhs = (x() * lag(c.ni(), &(&a + int(kk)))?)
        .scale(&(factorial(n) * int(c.ni() + 1) * recip(&pochhammer(&(&a + int(kk + 1)), n))?));
    let ak = &a + int(kk);
    let rhs = (h(&a)? - h(&(&a - int(1)))?).scale(&(&ak * (&ak - int(1))));
    eq(lhs, rhs)
}

fn l_lnrf(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.n, c.k, c.p(S::Alpha)?);
    let g = Seq::new(|m, th| {
        if m < 0 {
            return Ok(Poly::zero());
        }
        let al = th.get(S::Alpha)?;
        let pre = factorial(m as usize) * recip(&pochhammer(&(al + int(1)), m as usize))?;
        Ok(lag(m, al)?.scale(&pre))
    });
    let lad = g.apply_pow(Op::NablaN, kk).at((n + kk) as i64, &c.th)?;
    let rhs = lad.scale(&(sign(kk) * pochhammer(&(&a + int(1)), n + kk)));
    let lhs = (xk(kk) * lag(c.ni(), &(&a + int(c.ki())))?).scale(&factorial(n));
    eq(lhs, rhs)
}

/// Single step: `n!/(α+k+1)_n L_n^{(α+k)} = -(α+k)/x ∇_n [(n+1)!/(α+k)_{n+1} L_{n+1}^{(α+k-1)}]`.
fn l_lnrf_step(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.n, c.ki(), c.p(S::Alpha)?);
    let ak = &a + int(kk);
    let h = |m: usize| -> Result<Poly> {
        let pre = factorial(m) * recip(&pochhammer(&ak, m))?;
        Ok(lag(m as i64, &(&ak - int(1)))?.scale(&pre))
    };
    let lhs = (x() * lag(c.ni(), &ak)?)
        .scale(&(factorial(n) * recip(&pochhammer(&(&ak + int(1)), n))?));
    let rhs = (h(n + 1)? - h(n)?).scale(&-ak.clone());
    eq(lhs, rhs)
}

/// Integer `α`: `x^α L_n^{(α)} = (-1)^k (n+1)_α Δ_α^k [x^α L_{n-k}^{(α)} / (n-k+1)_k]`.
fn l_lalrf3(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.n, c.k, c.p(S::Alpha)?);
    if !a.is_integer() || a < int(0) {
        return Err(Error::InvalidParam("this identity needs a nonnegative integer alpha".into()));
    }
    let nk = n - kk;
    let base = Seq::new(move |_, th| {
        let b = th.get(S::Alpha)?;
        let e = b.to_integer().to_string().parse::<usize>().map_err(|_| Error::Pole("negative alpha".into()))?;
        let pre = recip(&pochhammer(&int(nk as i64 + 1), kk))?;
        Ok((xk(e) * lag(nk as i64, b)?).scale(&pre))
    });
    let lad = base.apply_pow(Op::DeltaParam(S::Alpha), kk).at(0, &c.th)?;
    let e = a.to_integer().to_string().parse::<usize>().unwrap_or(0);
    let rhs = lad.scale(&(sign(kk) * pochhammer(&int(c.ni() + 1), e)));
    eq(xk(e) * lag(c.ni(), &a)?, rhs)
}

fn l_lnrf2(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.ni(), c.k, c.p(S::Alpha)?);
    let ak = &a + int(kk as i64);
    let rhs = delta_pow(kk, n - kk as i64, |m| lag(m, &ak))?;
    eq(lag(n, &a)?, rhs)
}

fn l_lalrf2(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.ni(), c.k, c.p(S::Alpha)?);
    let rhs = param_seq(L, n + kk as i64)
        .apply_pow(Op::DeltaParam(S::Alpha), kk)
        .at(0, &c.th)?;
    eq(lag(n, &(&a + int(kk as i64)))?, rhs)
}

fn thirdorder_operator(a: &Rational) -> DiffOp {
    let lin = |c0: Rational, c1: i64| Poly::linear(int(c1), c0);
    DiffOp::new(vec![
        lin(int(2) + a, -1),
        lin(int(-4) - a * int(2), 3),
        lin(int(2) + a, -3),
        x(),
    ])
}

fn l_thirdorder(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let lhs = lag(n + 1, &(&a + int(1)))?.scale(&int(n + 1));
    eq(lhs, thirdorder_operator(&a).apply(&lag(n, &a)?))
}

fn l_thirdorder_h1(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let l = lag(n, &a)?;
    eq(&l - &l.derivative(), lag(n, &(&a + int(1)))?)
}

fn l_thirdorder_h2(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let l = lag(n, &a)?;
    let lhs = x() * l.derivative() - Poly::linear(int(1), -a.clone()) * &l;
    eq(lhs, lag(n + 1, &(&a - int(1)))?.scale(&int(n + 1)))
}

/// The two helpers as differential operators, composed: `h2|_{α+2} ∘ h1 ∘ h1`.
pub fn thirdorder_composed_operator(a: &Rational) -> (DiffOp, DiffOp) {
    let h1 = DiffOp::new(vec![Poly::one(), k(int(-1))]);
    let a2 = a + int(2);
    let h2 = DiffOp::new(vec![-Poly::linear(int(1), -a2), x()]);
    (h2.compose(&h1.compose(&h1)), thirdorder_operator(a))
}

fn l_second_diff(n: i64, a: &Rational) -> Result<(Poly, Poly, Poly)> {
    let (lm, l0, lp) = (lag(n, &(a - int(1)))?, lag(n, a)?, lag(n, &(a + int(1)))?);
    let d2 = &lp - &(&l0 + &l0) + &lm;
    Ok((d2, &lp - &l0, &l0 - &lm))
}

fn l_sode1(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let (d2, fwd, _) = l_second_diff(n, &a)?;
    let an = &a + int(n);
    let rhs = d2.scale(&-an.clone()) + (k(an) - x()) * fwd;
    eq(lag(n, &a)?.scale(&int(n)), rhs)
}

fn l_sode2(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::Alpha)?);
    let (d2, _, bwd) = l_second_diff(n, &a)?;
    let an = &a + int(n);
    let rhs = -(x() * d2) + (k(an) - x()) * bwd;
    eq(lag(n, &a)?.scale(&int(n)), rhs)
}

// ---------------------------------------------------------------- Charlier

fn c_rainc(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::A)?);
    let lhs = (ch(n + 1, &a)? - ch(n, &a)?).scale(&a);
    eq(lhs, -(x() * shift(&ch(n, &a)?, -1)))
}

fn c_lowdc(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::A)?);
    let p = ch(n, &a)?;
    let lhs = p.scale(&int(n)) + p.derivative().scale(&a);
    eq(lhs, ch(n - 1, &a)?.scale(&int(n + 1)))
}

/// `n C_n + a ∂_a C_n = n C_{n-1}`, with `∂_a` taken on `a^n C_n` (a polynomial in `a`).
fn c_lowdc_fixed(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::A)?);
    let jet = ParamJet::interpolate(S::A, c.n, &c.th, |th| {
        let b = th.get(S::A)?;
        Ok(ch(n, b)?.scale(&pow(b, n)?))
    })?;
    // a ∂_a C_n = a^{1-n} ∂_a(a^n C_n) - n C_n
    let p = ch(n, &a)?;
    let a_d = jet.derivative().value().scale(&pow(&a, 1 - n)?) - p.scale(&int(n));
    eq(p.scale(&int(n)) + a_d, ch(n - 1, &a)?.scale(&int(n)))
}

fn c_lowdonc(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::A)?);
    let p = ch(n, &a)?;
    let lhs = p.scale(&(&a - int(n))) + (&p - ch(n - 1, &a)?).scale(&int(n));
    eq(lhs, shift(&p, 1).scale(&a))
}

fn c_lowupnc(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.ni(), c.p(S::A)?);
    let p = ch(n, &a)?;
    let lhs = p.scale(&(&a - int(n + 1))) + (ch(n + 1, &a)? - &p).scale(&a);
    eq(lhs, shift(&ch(n + 1, &a)?, 1).scale(&a))
}

fn c_cnrf(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.ni(), c.k, c.p(S::A)?);
    let lhs = pochhammer_poly(&shift(&x(), 1), kk) * ch(n, &a)?;
    let lad = delta_pow(kk, n, |m| Ok(shift(&ch(m, &a)?, kk as i64)))?;
    eq(lhs, lad.scale(&pow(&-a.clone(), kk as i64)?))
}

fn c_cnrf2(c: &Ctx) -> Result<Eqs> {
    let (n, kk, a) = (c.ni(), c.k, c.p(S::A)?);
    let g = |m: i64| -> Result<Poly> {
        if m < 0 {
            return Ok(Poly::zero());
        }
        let pre = pow(&a, m)? * recip(&factorial(m as usize))?;
        Ok(shift(&ch(m, &a)?, -(kk as i64)).scale(&pre))
    };
    let rhs = delta_pow(kk, n - kk as i64, g)?.scale(&factorial(c.n));
    eq(ch(n, &a)?.scale(&pow(&a, n)?), rhs)
}

/// `(n+1)! Δ_n [a^n/n! C_n(x)] = a^{n+1} C_{n+1}(x+1)`
fn c_cnrf2_step(c: &Ctx) -> Result<Eqs> {
    let (n, a) = (c.n, c.p(S::A)?);
    let g = |m: usize| -> Result<Poly> {
        Ok(ch(m as i64, &a)?.scale(&(pow(&a, m as i64)? * recip(&factorial(m))?)))
    };
    let lhs = (g(n + 1)? - g(n)?).scale(&factorial(n + 1));
    eq(lhs, shift(&ch(n as i64 + 1, &a)?, 1).scale(&pow(&a, n as i64 + 1)?))
}

// ---------------------------------------------------------------- Meixner

fn bc(c: &Ctx) -> Result<(i64, Rational, Rational)> {
    Ok((c.ni(), c.p(S::Beta)?, c.p(S::C)?))
}

fn m_rainm(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let pre = &b * &cc * recip(&(&cc - int(1)))?;
    let lhs = (mx(n + 1, &b, &cc)? - mx(n, &b, &cc)?).scale(&pre);
    eq(lhs, x() * shift(&mx(n, &(&b + int(1)), &cc)?, -1))
}

fn m_raiupnm(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let p = mx(n, &b, &cc)?;
    let lhs = &p + &(mx(n + 1, &b, &cc)? - &p).scale(&(&cc * recip(&(&cc - int(1)))?));
    let rhs = (Poly::linear(int(1), b.clone()) * mx(n, &(&b + int(1)), &cc)?).scale(&recip(&b)?);
    eq(lhs, rhs)
}

fn m_raidonm(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let p = mx(n, &b, &cc)?;
    let lhs = &p + &(&p - mx(n - 1, &b, &cc)?).scale(&recip(&(&cc - int(1)))?);
    let rhs = (Poly::linear(int(1), b.clone()) * mx(n - 1, &(&b + int(1)), &cc)?).scale(&recip(&b)?);
    eq(lhs, rhs)
}

fn m_lowbm(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let pre = &cc * &b * (int(1) - &b) * recip(&(&cc - int(1)))?;
    let lhs = (mx(n, &b, &cc)? - mx(n, &(&b - int(1)), &cc)?).scale(&pre);
    let rhs = (x() * shift(&mx(n - 1, &(&b + int(1)), &cc)?, -1)).scale(&int(n));
    eq(lhs, rhs)
}

fn m_raiupbm(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let t = &b * (&b - int(1)) * recip(&((&b + int(n)) * (&cc - int(1))))?;
    let lhs = shift(&mx(n + 1, &(&b - int(1)), &cc)?, 1).scale(&(&t * &cc));
    let p = mx(n, &b, &cc)?;
    let xb = Poly::linear(int(1), b.clone());
    let rhs = Poly::linear(int(1), &b + &t) * &p + xb * (mx(n, &(&b + int(1)), &cc)? - &p);
    eq(lhs, rhs)
}

fn m_raidobm(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let t = (&b - int(1)) * (&b - int(2)) * recip(&((&b - int(1) + int(n)) * (&cc - int(1))))?;
    let lhs = shift(&mx(n + 1, &(&b - int(2)), &cc)?, 1).scale(&(&t * &cc));
    let p = mx(n, &b, &cc)?;
    let rhs = Poly::linear(int(1), &b - int(1) + &t) * &p
        - (&p - mx(n, &(&b - int(1)), &cc)?).scale(&t);
    eq(lhs, rhs)
}

/// `W_n` as a polynomial in `c` around the grid point.
fn w_jet(m: i64, deg: usize, th: &ParamPoint) -> Result<ParamJet> {
    let b = th.get(S::Beta)?.clone();
    ParamJet::interpolate(S::C, deg, th, |p| wm(m, &b, p.get(S::C)?))
}

fn m_lowcm(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let d = w_jet(n, c.n, &c.th)?.derivative().value();
    let pre = int(n) * pow(&cc, n)? * pochhammer(&(&b + int(1)), c.n)
        * recip(&(&cc + int(n) + &b))?;
    let rhs = (Poly::linear(int(1), b.clone()) * mx(n - 1, &(&b + int(1)), &cc)?).scale(&pre);
    eq(d, rhs)
}

fn m_lowcm_fixed(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let d = w_jet(n, c.n, &c.th)?.derivative().value();
    let rhs = (Poly::linear(int(1), b.clone()) * wm(n - 1, &(&b + int(1)), &cc)?).scale(&int(n));
    eq(d, rhs)
}

/// `bf` multiplies both `M` terms: `β` as printed, `1` in the corrected reading.
fn raidcm(c: &Ctx, with_beta: bool) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let bf = if with_beta { b.clone() } else { int(1) };
    let wpre = pow(&cc, n)? * pochhammer(&b, c.n);
    let lhs = mx(n + 1, &(&b - int(1)), &cc)?.scale(&(&cc * (int(1) - &b) * &wpre * &bf));
    let d = w_jet(n, c.n, &c.th)?.derivative().value();
    let lin = Poly::linear(&cc - int(1), int(n) - int(n + 1) * &cc + &cc * &b);
    let rhs = d.scale(&(&cc * (int(1) - &cc))) - lin * mx(n, &b, &cc)?.scale(&(&wpre * &bf));
    eq(lhs, rhs)
}

fn m_raidcm(c: &Ctx) -> Result<Eqs> {
    raidcm(c, true)
}

fn m_raidcm_fixed(c: &Ctx) -> Result<Eqs> {
    raidcm(c, false)
}

fn m_sodem(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let (pm, p0, pp) = (mx(n, &(&b - int(1)), &cc)?, mx(n, &b, &cc)?, mx(n, &(&b + int(1)), &cc)?);
    let t = &b * (&b - int(1)) * recip(&(&cc - int(1)))?;
    let d2 = &pp - &(&p0 + &p0) + &pm;
    let coef = Poly::linear(&b + int(n), &t + &b * (&b + int(n)));
    let rhs = d2.scale(&t) - coef * (&pp - &p0);
    eq((x() * p0).scale(&int(n)), rhs)
}

/// `p_m = c^m M_m`, the sequence normalized at the root `-β`.
fn m_hat(m: i64, b: &Rational, cc: &Rational) -> Result<Poly> {
    if m < 0 {
        return Ok(Poly::zero());
    }
    Ok(mx(m, b, cc)?.scale(&pow(cc, m)?))
}

fn m_rootnorm_ab(n: i64, b: &Rational, cc: &Rational) -> Result<(Rational, Rational)> {
    let inv = recip(&(cc - int(1)))?;
    Ok(((b + int(n)) * &inv, int(n) * cc * inv))
}

fn m_rootnorm_rec(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let (al, ga) = m_rootnorm_ab(n, &b, &cc)?;
    let p = |m| m_hat(m, &b, &cc);
    let lhs = Poly::linear(int(1), b.clone()) * p(n)?;
    let rhs = p(n + 1)?.scale(&al) - p(n)?.scale(&(&al + &ga)) + p(n - 1)?.scale(&ga);
    eq(lhs, rhs)
}

fn m_rootnorm_sl(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let (al, ga) = m_rootnorm_ab(n, &b, &cc)?;
    let (al_next, ga_next) = m_rootnorm_ab(n + 1, &b, &cc)?;
    let p = |m| m_hat(m, &b, &cc);
    let lhs = Poly::linear(int(1), b.clone()) * p(n)?;
    let fwd = |m| -> Result<Poly> { Ok(p(m + 1)? - p(m)?) };
    // ρ_n = d_n²/d_{n-1}² = γ_n / α_{n-1}
    let rho = |m: i64| -> Result<Rational> {
        let (a_prev, _) = m_rootnorm_ab(m - 1, &b, &cc)?;
        let (_, g) = m_rootnorm_ab(m, &b, &cc)?;
        Ok(g * recip(&a_prev)?)
    };
    // d_n² Δ_n (γ_n/d_n²) ∇_n p_n = (γ_{n+1}/ρ_{n+1}) ∇p_{n+1} - γ_n ∇p_n
    let form1 = fwd(n)?.scale(&(ga_next * recip(&rho(n + 1)?)?)) - fwd(n - 1)?.scale(&ga);
    // d_n² ∇_n (α_n/d_n²) Δ_n p_n = α_n Δp_n - ρ_n α_{n-1} Δp_{n-1}
    let tail = if n == 0 {
        Poly::zero()
    } else {
        let (a_prev, _) = m_rootnorm_ab(n - 1, &b, &cc)?;
        fwd(n - 1)?.scale(&(rho(n)? * a_prev))
    };
    let form2 = fwd(n)?.scale(&al) - tail;
    let form3 = (fwd(n)? - fwd(n - 1)?).scale(&ga) + fwd(n)?.scale(&(&al - &ga));
    let _ = al_next;
    Ok(vec![(lhs.clone(), form1), (lhs.clone(), form2), (lhs, form3)])
}

/// `(c-1)^k (x+1)_k M_n(x; β+k) = (β)_k c^k ∇_n^k [M_m(x + s; β)](n+k)`,
/// `s = 0` as printed, `s = k` corrected.
fn mnrf(c: &Ctx, corrected: bool) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let kk = c.k;
    let s = if corrected { kk as i64 } else { 0 };
    let lhs = (pochhammer_poly(&shift(&x(), 1), kk) * mx(n, &(&b + int(kk as i64)), &cc)?)
        .scale(&pow(&(&cc - int(1)), kk as i64)?);
    let lad = nabla_pow(kk, n + kk as i64, |m| Ok(shift(&mx(m, &b, &cc)?, s)))?;
    eq(lhs, lad.scale(&(pochhammer(&b, kk) * pow(&cc, kk as i64)?)))
}

fn m_mnrf(c: &Ctx) -> Result<Eqs> {
    mnrf(c, false)
}

fn m_mnrf_fixed(c: &Ctx) -> Result<Eqs> {
    mnrf(c, true)
}

fn m_mnrf2(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let kk = c.k;
    let mc = -cc.clone();
    let lhs = (pochhammer_poly(&Poly::linear(int(1), b.clone()), kk) * mx(n, &(&b + int(kk as i64)), &cc)?)
        .scale(&(pow(&(int(1) - &cc), kk as i64)? * pow(&mc, n)?));
    let lad = delta_pow(kk, n + kk as i64, |m| Ok(mx(m, &b, &cc)?.scale(&pow(&mc, m)?)))?;
    eq(lhs, lad.scale(&pochhammer(&b, kk)))
}

fn m_mnrf2_fixed(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let kk = c.k;
    let lhs = (pochhammer_poly(&Poly::linear(int(1), b.clone()), kk) * mx(n, &(&b + int(kk as i64)), &cc)?)
        .scale(&(pow(&(&cc - int(1)), kk as i64)? * pow(&cc, n)?));
    let lad = delta_pow(kk, n, |m| m_hat(m, &b, &cc))?;
    eq(lhs, lad.scale(&pochhammer(&b, kk)))
}

fn m_mnrf2_step(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let mc = -cc.clone();
    let lhs = mx(n + 1, &b, &cc)?.scale(&pow(&mc, n + 1)?) - mx(n, &b, &cc)?.scale(&pow(&mc, n)?);
    let pre = (int(1) - &cc) * pow(&mc, n)? * recip(&b)?;
    let rhs = (Poly::linear(int(1), b.clone()) * mx(n - 1, &(&b + int(1)), &cc)?).scale(&pre);
    eq(lhs, rhs)
}

fn m_mnrf2_step_fixed(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let lhs = m_hat(n + 1, &b, &cc)? - m_hat(n, &b, &cc)?;
    let pre = (&cc - int(1)) * pow(&cc, n)? * recip(&b)?;
    let rhs = (Poly::linear(int(1), b.clone()) * mx(n, &(&b + int(1)), &cc)?).scale(&pre);
    eq(lhs, rhs)
}

fn m_mbrf(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let kk = c.k;
    let nk = n + kk as i64;
    let mut seq = Seq::new(move |_, th| {
        let cc = th.get(S::C)?;
        Ok(shift(&mx(nk, th.get(S::Beta)?, cc)?, kk as i64))
    });
    for j in 1..=kk as i64 {
        seq = seq
            .apply(Op::NablaParam(S::Beta))
            .times(move |_, th| {
                let bb = th.get(S::Beta)?;
                Ok((bb + int(j - 1)) * (int(2 - j) - bb))
            });
    }
    let lhs = (pochhammer_poly(&shift(&x(), 1), kk) * mx(n, &(&b + int(kk as i64)), &cc)?)
        .scale(&(pow(&(&cc - int(1)), kk as i64)? * pochhammer(&int(n + 1), kk)));
    eq(lhs, seq.at(n, &c.th)?.scale(&pow(&cc, kk as i64)?))
}

/// `G_0 = W_{n+k}(β)`, `G_j = f_j ∂_c G_{j-1}` with `f_j = c+n+β+k` as printed or `1` corrected;
/// `(n+1)_k (x+β)_k W_n(β+k) = G_k`.
fn mcrf(c: &Ctx, printed: bool) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let kk = c.k;
    let mut jet = w_jet(n + kk as i64, c.n + kk, &c.th)?;
    let f0 = &cc + int(n + kk as i64) + &b;
    for _ in 0..kk {
        jet = jet.derivative();
        if printed {
            jet = jet.mul_linear(&f0, &int(1));
        }
    }
    let lhs = (pochhammer_poly(&Poly::linear(int(1), b.clone()), kk) * wm(n, &(&b + int(kk as i64)), &cc)?)
        .scale(&pochhammer(&int(n + 1), kk));
    eq(lhs, jet.value())
}

fn m_mcrf(c: &Ctx) -> Result<Eqs> {
    mcrf(c, true)
}

fn m_mcrf_fixed(c: &Ctx) -> Result<Eqs> {
    mcrf(c, false)
}

fn m_thirdorder(c: &Ctx) -> Result<Eqs> {
    let (n, b, cc) = bc(c)?;
    let p0 = mx(n, &b, &cc)?;
    let p1 = p0.backward_diff();
    let p2 = p1.backward_diff();
    let p3 = p2.backward_diff();
    let c1 = &cc - int(1);
    let c12 = &c1 * &c1;
    let cc2 = &cc * &cc;
    // (βc + cx + c - x)/c
    let k0 = Poly::linear(&cc - int(1), &b * &cc + &cc).scale(&recip(&cc)?);
    // (2βc² + 2c²x + 2c² - cx - x)/((c-1)c)
    let k1 = Poly::linear(int(2) * &cc2 - &cc - int(1), int(2) * &b * &cc2 + int(2) * &cc2)
        .scale(&recip(&(&c1 * &cc))?);
    // c(-2β + 3βc + 3cx + 3c - 3x - 2)/(c-1)²
    let k2 = Poly::linear(int(3) * &cc - int(3), int(-2) * &b + int(3) * &b * &cc + int(3) * &cc - int(2))
        .scale(&(&cc * recip(&c12)?));
    // c²(β + x + 1)/(c-1)²
    let k3 = Poly::linear(int(1), &b + int(1)).scale(&(&cc2 * recip(&c12)?));
    let lhs = k0 * p0 + k1 * p1 + k2 * p2 + k3 * p3;
    let rhs = mx(n + 1, &(&b + int(1)), &cc)?
        .scale(&((&b + int(n)) * (&b + int(n + 1)) * recip(&b)?));
    eq(lhs, rhs)
}

fn lemma_meixner_hypothesis(th: &ParamPoint) -> bool {
    th.get(S::Beta).map(|b| *b != int(0) && *b != int(2)).unwrap_or(false)
}

// ---------------------------------------------------------------- big q-Laguerre

struct Bq {
    n: i64,
    a: Rational,
    b: Rational,
    q: Rational,
}

fn bqp(c: &Ctx) -> Result<Bq> {
    Ok(Bq { n: c.ni(), a: c.p(S::A)?, b: c.p(S::B)?, q: c.p(S::Q)? })
}

fn b_rainbql(c: &Ctx) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let phi1 = (int(1) - &a * &q) * (int(1) - &b * &q);
    let lhs = (bq(n + 1, &a, &b, &q)? - bq(n, &a, &b, &q)?).scale(&(phi1 * qpow(&q, n)?));
    let rhs = Poly::linear(int(1), int(-1)) * dilate(&bq(n, &(&a * &q), &(&b * &q), &q)?, &q);
    eq(lhs, rhs)
}

fn b_raiupnbql(c: &Ctx) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let qn1 = qpow(&q, n + 1)?;
    let qi = recip(&q)?;
    let lhs = dilate(&bq(n + 1, &(&a * &qi), &(&b * &qi), &q)?, &qi)
        .scale(&((&a - int(1)) * (&b - int(1)) * &qn1));
    let (al, _, _) = recurrence_coeffs(BqL, c.n, &c.th)?;
    let p = bq(n, &a, &b, &q)?;
    let cf = &a * &b * &qn1 - &a * &qn1 - &b * &qn1 + int(1);
    let rhs = p.scale(&cf) + (bq(n + 1, &a, &b, &q)? - &p).scale(&al);
    eq(lhs, rhs)
}

fn raidonbql(c: &Ctx, with_qn: bool) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let qn = qpow(&q, n)?;
    let qi = recip(&q)?;
    let lhs = dilate(&bq(n, &(&a * &qi), &(&b * &qi), &q)?, &qi)
        .scale(&((&a - int(1)) * (&b - int(1)) * &qn * &q));
    let (_, _, ga) = recurrence_coeffs(BqL, c.n, &c.th)?;
    let p = bq(n, &a, &b, &q)?;
    let cf = &q * (&a * &b * &qn - &a * &qn - &b * &qn + int(1));
    let g = if with_qn { &qn * ga } else { ga };
    eq(lhs, p.scale(&cf) + (&p - bq(n - 1, &a, &b, &q)?).scale(&g))
}

fn b_raidonbql(c: &Ctx) -> Result<Eqs> {
    raidonbql(c, true)
}

fn b_raidonbql_fixed(c: &Ctx) -> Result<Eqs> {
    raidonbql(c, false)
}

/// `(a-1) φ(1) 𝒟 p_n = a(1-q^n)/q^{n-1} (x-1) p_{n-1}(xq; aq, bq)` for a choice of `𝒟`.
fn lowabql(c: &Ctx, op: Op) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let phi1 = (int(1) - &a * &q) * (int(1) - &b * &q);
    let d = param_seq(BqL, n).apply(op).at(0, &c.th)?;
    let lhs = d.scale(&((&a - int(1)) * phi1));
    let pre = &a * (int(1) - qpow(&q, n)?) * qpow(&q, 1 - n)?;
    let rhs = (Poly::linear(int(1), int(-1)) * dilate(&bq(n - 1, &(&a * &q), &(&b * &q), &q)?, &q)).scale(&pre);
    eq(lhs, rhs)
}

fn b_lowabql(c: &Ctx) -> Result<Eqs> {
    lowabql(c, Op::QDiffParam(S::A))
}

/// Corrected: `(q-1)(1-aq)(1-aq²)(1-bq) 𝒟_{q,a} p_n = q^{2-n}(q^n-1)(x-1) p_{n-1}(xq; aq², bq)`.
fn b_lowabql_fixed(c: &Ctx) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let d = param_seq(BqL, n).apply(Op::QDiffParam(S::A)).at(0, &c.th)?;
    let aq = &a * &q;
    let pre = (&q - int(1)) * (int(1) - &aq) * (int(1) - &aq * &q) * (int(1) - &b * &q);
    let rhs_pre = qpow(&q, 2 - n)? * (qpow(&q, n)? - int(1));
    let rhs = (Poly::linear(int(1), int(-1)) * dilate(&bq(n - 1, &(&aq * &q), &(&b * &q), &q)?, &q))
        .scale(&rhs_pre);
    eq(d.scale(&pre), rhs)
}

fn raiupbbql(c: &Ctx, op: Op) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let qn1 = qpow(&q, n + 1)?;
    let aq = &a * &q;
    let lhs = bq(n, &(&a * recip(&q)?), &b, &q)?.scale(&((&a - int(1)) * &b * &qn1 * (&aq - int(1))));
    let d = param_seq(BqL, n).apply(op).at(0, &c.th)?;
    let t = Poly::linear(int(1), -aq.clone()).scale(&(&a * &qn1 - int(1)));
    let u = Poly::linear(int(1), -(&a - &b + &a * &b) * &qn1).scale(&(int(1) - &aq));
    let rhs = &t * &d + (u + t) * bq(n, &a, &b, &q)?;
    eq(lhs, rhs)
}

fn b_raiupbbql(c: &Ctx) -> Result<Eqs> {
    raiupbbql(c, Op::QDiffParam(S::A))
}

fn b_raiupbbql_fixed(c: &Ctx) -> Result<Eqs> {
    raiupbbql(c, Op::QForwardParam(S::A))
}

fn raidobbql(c: &Ctx, op: Op) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let qn1 = qpow(&q, n + 1)?;
    let aq1 = &a * &q - int(1);
    let lhs = bq(n + 1, &(&a * recip(&q)?), &b, &q)?
        .scale(&((&a - int(1)) * &aq1 * (&b * &qn1 - int(1))));
    let d = param_seq(BqL, n).apply(op).at(0, &c.th)?;
    let lin = Poly::linear(int(1), &a * &b * &qn1 - &a - &b * &qn1).scale(&aq1);
    let rhs = d.scale(&((int(1) - &a) * &b * &aq1 * &qn1)) + lin * bq(n, &a, &b, &q)?;
    eq(lhs, rhs)
}

fn b_raidobbql(c: &Ctx) -> Result<Eqs> {
    raidobbql(c, Op::InvQDiffParam(S::A))
}

fn b_raidobbql_fixed(c: &Ctx) -> Result<Eqs> {
    raidobbql(c, Op::QBackwardParam(S::A))
}

fn b_sode(c: &Ctx, second: bool) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let qn1 = qpow(&q, n + 1)?;
    let t = Poly::linear(int(1), -(&a * &q)).scale(&(&a * &qn1 - int(1)));
    let ts = k((&a - int(1)) * &b * &qn1 * (&a * &q - int(1)));
    let base = param_seq(BqL, n);
    let (dq, dqi) = (Op::QDiffParam(S::A), Op::InvQDiffParam(S::A));
    let lhs = (Poly::linear(int(1), int(-1)) * bq(n, &a, &b, &q)?).scale(&(&a * (int(1) - qpow(&q, n)?)));
    let rhs = if second {
        &ts * &base.apply(dqi).apply(dq).at(0, &c.th)? - (&t - &ts) * base.apply(dqi).at(0, &c.th)?
    } else {
        &t * &base.apply(dq).apply(dqi).at(0, &c.th)? - (&t - &ts) * base.apply(dq).at(0, &c.th)?
    };
    eq(lhs, rhs)
}

fn b_sode1(c: &Ctx) -> Result<Eqs> {
    b_sode(c, false)
}

fn b_sode2(c: &Ctx) -> Result<Eqs> {
    b_sode(c, true)
}

fn bqlnrf_lhs(c: &Ctx) -> Result<Poly> {
    let Bq { n, a, b, q } = bqp(c)?;
    let qk = qpow(&q, c.ki())?;
    let p = dilate(&bq(n, &(&a * &qk), &(&b * &qk), &q)?, &qk);
    Ok(qpochhammer_poly(&x(), &q, c.k) * p)
}

fn b_bqlnrf(c: &Ctx) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let pre = qpochhammer(&(&a * &q), &q, c.k) * qpochhammer(&(&b * &q), &q, c.k);
    let lad = index_seq(BqL).apply_pow(Op::NablaN, c.k).at(n + c.ki(), &c.th)?;
    eq(bqlnrf_lhs(c)?, lad.scale(&pre))
}

/// Ladder of `q^m Δ_n` steps.
fn b_bqlnrf_fixed(c: &Ctx) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let pre = sign(c.k) * qpochhammer(&(&a * &q), &q, c.k) * qpochhammer(&(&b * &q), &q, c.k);
    let mut seq = index_seq(BqL);
    for _ in 0..c.k {
        seq = seq.apply(Op::DeltaN).times(|m, th| pow(th.get(S::Q)?, m));
    }
    eq(bqlnrf_lhs(c)?, seq.at(n, &c.th)?.scale(&pre))
}

fn b_bqlarf(c: &Ctx) -> Result<Eqs> {
    let Bq { n, b, q, .. } = bqp(c)?;
    let kk = c.k;
    let nk = n + kk as i64;
    let mut seq = param_seq(BqL, nk);
    for j in 1..=kk as i64 {
        seq = seq.apply(Op::QDiffParam(S::A)).times(move |_, th| {
            let (a, q) = (th.get(S::A)?, th.get(S::Q)?);
            let aqj = a * pow(q, j)?;
            Ok((a * pow(q, j - 1)? - int(1)) * (int(1) - &aqj) * recip(&aqj)?)
        });
    }
    let lhs = bqlnrf_lhs(c)?.scale(&qpochhammer(&qpow(&q, n + 1)?, &q, kk));
    let tri = (kk * (kk + 1) / 2) as i64;
    let pre = qpow(&q, n * kk as i64 + tri)? * qpochhammer(&(&b * &q), &q, kk);
    eq(lhs, seq.at(n, &c.th)?.scale(&pre))
}

fn q_derivs(p: &Poly, q: &Rational, count: usize) -> Result<Vec<Poly>> {
    let mut out = vec![p.clone()];
    for _ in 1..count {
        let next = out.last().expect("nonempty").q_derivative(q)?;
        out.push(next);
    }
    Ok(out)
}

fn b_fourthorder(c: &Ctx) -> Result<Eqs> {
    let Bq { n, a, b, q } = bqp(c)?;
    let (q2, q4) = (&q * &q, qpow(&q, 4)?);
    let x4 = Poly::linear(q4.clone(), int(-1));
    let ab = &a * &b;
    let a2 = &a * &a;
    let b2 = &b * &b;
    let aq2b = (&a * &q2 - int(1)) * (&b * &q2 - int(1));
    let q1 = &q - int(1);
    let qi = recip(&q)?;
    let qi2 = recip(&q2)?;
    let apb = &a + &b;
    let p0 = (x4.scale(&(&apb + &a * &q + &b * &q + &ab * &q)) + k(&apb * (int(1) + &q) * &aq2b)).scale(&qi);
    let s1 = &ab + &a2 * &q + int(2) * &ab * &q + &a2 * &b * &q + &b2 * &q + &a * &b2 * &q
        + &ab * &q2 + &a2 * &b * &q2 + &a * &b2 * &q2;
    let t1 = &ab + &a2 * &q + int(2) * &ab * &q + &b2 * &q + &ab * &q2;
    let p1 = (x4.scale(&s1) + k(&aq2b * t1)).scale(&(&q1 * &qi2));
    let s2 = &apb + &ab + &a * &q + &a2 * &q + &b * &q + int(2) * &ab * &q + &b2 * &q + &ab * &q2;
    let p2 = (x4.scale(&s2) + k(&apb * (int(1) + &q) * &aq2b)).scale(&(&ab * &q1 * &q1 * &qi2));
    let p3 = (x4.scale(&(int(1) + &a + &b + &a * &q + &b * &q)) + k(aq2b.clone()))
        .scale(&(&ab * &ab * pow(&q1, 3)? * &qi2));
    let p4 = x4.scale(&(pow(&ab, 3)? * pow(&q1, 4)? * &qi2));
    let d = q_derivs(&bq(n, &a, &b, &q)?, &q, 5)?;
    let rhs = p0 * &d[0] + p1 * &d[1] + p2 * &d[2] + p3 * &d[3] + p4 * &d[4];
    let qa = |s: &Rational, e: i64| -> Result<Rational> { Ok(s * qpow(&q, e)? - int(1)) };
    let pref = qa(&a, n + 1)? * qa(&a, n + 2)? * qa(&b, n + 1)? * qa(&b, n + 2)?
        * recip(&(qpow(&q, 4 * n)? * qa(&a, 1)? * qa(&b, 1)?))?;
    let lhs = dilate(&bq(n + 1, &(&a * &q), &(&b * &q), &q)?, &q4).scale(&pref);
    eq(lhs, rhs)
}

// ---------------------------------------------------------------- little q-Laguerre

fn aq_of(c: &Ctx) -> Result<(i64, Rational, Rational)> {
    Ok((c.ni(), c.p(S::A)?, c.p(S::Q)?))
}

fn q_lownlql(c: &Ctx) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let pre = qpow(&q, 1 - n)? * recip(&(&a * &q - int(1)))?;
    let lhs = (x() * lq(n - 1, &(&a * &q), &q)?).scale(&pre);
    eq(lhs, lq(n, &a, &q)? - lq(n - 1, &a, &q)?)
}

fn q_lownuplql(c: &Ctx) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let qi = recip(&q)?;
    let lhs = (Poly::linear(int(1), int(-1)) * dilate(&lq(n, &(&a * &qi), &q)?, &qi)).scale(&(int(1) - &a));
    let p = lq(n, &a, &q)?;
    let rhs = (lq(n + 1, &a, &q)? - &p).scale(&(&a * qpow(&q, n + 1)? - int(1)))
        - Poly::linear(a.clone(), int(1) - &a) * &p;
    eq(lhs, rhs)
}

fn q_lowndolql(c: &Ctx) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let qi = recip(&q)?;
    let lhs = (Poly::linear(int(1), int(-1)) * dilate(&lq(n - 1, &(&a * &qi), &q)?, &qi)).scale(&(int(1) - &a));
    let p = lq(n, &a, &q)?;
    let rhs = Poly::linear(a.clone(), (qpow(&q, n)? - int(1)) * &a) * (&p - lq(n - 1, &a, &q)?)
        - Poly::linear(a.clone(), int(1) - &a) * &p;
    eq(lhs, rhs)
}

fn lowalql(c: &Ctx, op: Op) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let pre = &a * (int(1) - qpow(&q, n)?)
        * recip(&(qpow(&q, n - 1)? * (int(1) - &a) * (int(1) - &a * &q)))?;
    let lhs = (x() * lq(n - 1, &(&a * &q), &q)?).scale(&pre);
    eq(lhs, param_seq(LqL, n).apply(op).at(0, &c.th)?)
}

fn q_lowalql(c: &Ctx) -> Result<Eqs> {
    lowalql(c, Op::InvQDiffParam(S::A))
}

fn q_lowalql_fixed(c: &Ctx) -> Result<Eqs> {
    lowalql(c, Op::QBackwardParam(S::A))
}

fn raiadolql(c: &Ctx, op: Op) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let qn = qpow(&q, n)?;
    let lhs = lq(n, &(&a * recip(&q)?), &q)?.scale(&((&a - int(1)) * &qn * (&a * &q - int(1))));
    let d = param_seq(LqL, n).apply(op).at(0, &c.th)?;
    let lin = Poly::linear(&a * &q * (&qn - int(1)), &qn * (&a * &q - int(1)) * (&a - int(1)));
    let rhs = (x() * d).scale(&(&a * &qn * &q - int(1))) + lin * lq(n, &a, &q)?;
    eq(lhs, rhs)
}

fn q_raiadolql(c: &Ctx) -> Result<Eqs> {
    raiadolql(c, Op::InvQDiffParam(S::A))
}

fn q_raiadolql_fixed(c: &Ctx) -> Result<Eqs> {
    raiadolql(c, Op::QForwardParam(S::A))
}

fn raiadolql2(c: &Ctx, op: Op, flip: bool) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let (qn, qn1) = (qpow(&q, n)?, qpow(&q, n - 1)?);
    let s = if flip { int(-1) } else { int(1) };
    let lhs = lq(n - 1, &(&a * recip(&q)?), &q)?.scale(&(s * &a * (&a - int(1)) * &qn1 * (&qn - int(1))));
    let d = param_seq(LqL, n).apply(op).at(0, &c.th)?;
    let t = Poly::linear(int(1), &a * qpow(&q, 2 * n - 1)? - &a * &qn1).scale(&(&a - int(1)));
    let lin = Poly::linear(&a * (&qn - int(1)), (int(1) - &a) * &a * &qn1 * (&qn - int(1)));
    eq(lhs, t * d + lin * lq(n, &a, &q)?)
}

fn q_raiadolql2(c: &Ctx) -> Result<Eqs> {
    raiadolql2(c, Op::QDiffParam(S::A), false)
}

fn q_raiadolql2_fixed(c: &Ctx) -> Result<Eqs> {
    raiadolql2(c, Op::QBackwardParam(S::A), true)
}

/// `s = (a-1)q^n(aq-1)`, `s* = (1-aq^{n+1})x`, with forward/backward parameter operators.
fn lql_sode(c: &Ctx, fwd: Op, bwd: Op, second: bool) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let qn = qpow(&q, n)?;
    let s = k((&a - int(1)) * &qn * (&a * &q - int(1)));
    let ss = x().scale(&(int(1) - &a * &qn * &q));
    let base = param_seq(LqL, n);
    let lhs = (x() * lq(n, &a, &q)?).scale(&(&a * &q * (&qn - int(1))));
    let rhs = if second {
        &ss * &base.apply(bwd).apply(fwd).at(0, &c.th)? - (&s - &ss) * base.apply(bwd).at(0, &c.th)?
    } else {
        &s * &base.apply(fwd).apply(bwd).at(0, &c.th)? - (&s - &ss) * base.apply(fwd).at(0, &c.th)?
    };
    eq(lhs, rhs)
}

fn q_sode1(c: &Ctx) -> Result<Eqs> {
    lql_sode(c, Op::QDiffParam(S::A), Op::InvQDiffParam(S::A), false)
}

fn q_sode2(c: &Ctx) -> Result<Eqs> {
    lql_sode(c, Op::QDiffParam(S::A), Op::InvQDiffParam(S::A), true)
}

fn q_sode1_fixed(c: &Ctx) -> Result<Eqs> {
    lql_sode(c, Op::QForwardParam(S::A), Op::QBackwardParam(S::A), false)
}

fn q_sode2_fixed(c: &Ctx) -> Result<Eqs> {
    lql_sode(c, Op::QForwardParam(S::A), Op::QBackwardParam(S::A), true)
}

fn q_fourthorder(c: &Ctx) -> Result<Eqs> {
    let (n, a, q) = aq_of(c)?;
    let qp = |e: i64| qpow(&q, e);
    let q1 = &q - int(1);
    let a2 = &a * &a;
    let aq2 = &a * qp(2)? - int(1);
    let p0 = (Poly::monomial(qp(4)? * (&a * qp(3)? - &a * &q - int(1) - &q - qp(2)?), 1)
        + k(&aq2 * (&a * qp(3)? - int(1) - &q - qp(2)?)))
        .scale(&recip(&qp(3)?)?);
    let c11 = &a2 * qp(4)? + &a2 * qp(3)? - int(1) - &a - &q - int(2) * &a * &q - qp(2)?
        - &a * qp(2)? + &a * qp(3)? + &a * qp(4)?;
    let p1 = (Poly::monomial(&a * qp(9)?, 2) + Poly::monomial(qp(4)? * c11, 1)
        + k(&aq2 * (&a * qp(4)? - int(1) - &q - qp(2)? + &a * qp(3)?)))
        .scale(&(&q1 * recip(&qp(5)?)?));
    let c21 = &a2 * qp(5)? + int(2) * &a2 * qp(4)? - &a - &q - int(2) * &a * &q - int(2) * &a * qp(2)?
        + &a2 * qp(3)? + &a * qp(4)?;
    let p2 = (Poly::monomial(&a * qp(8)? * (int(1) + &q + &a * &q), 2) + Poly::monomial(qp(3)? * c21, 1)
        + k(&aq2 * (&a * qp(3)? - int(1))))
        .scale(&(&q1 * &q1 * recip(&qp(6)?)?));
    let p3 = (Poly::monomial(qp(5)? * (int(1) + &a + &a * &q), 2)
        + Poly::monomial((int(1) + &q) * (&a * qp(3)? - int(1)), 1))
        .scale(&(&a * pow(&q1, 3)? * recip(&qp(4)?)?));
    let p4 = Poly::monomial(&a2 * pow(&q1, 4)?, 2);
    let d = q_derivs(&lq(n, &a, &q)?, &q, 5)?;
    let rhs = p0 * &d[0] + p1 * &d[1] + p2 * &d[2] + p3 * &d[3] + p4 * &d[4];
    let pref = (&a * qp(n + 1)? - int(1)) * (&a * qp(n + 2)? - int(1))
        * recip(&(qp(3 * n)? * &q1 * (&a * &q - int(1))))?;
    let lhs = dilate(&lq(n + 1, &(&a * &q), &q)?, &qp(4)?).scale(&pref);
    eq(lhs, rhs)
}

// ---------------------------------------------------------------- Stieltjes–Wigert

fn s_rainsw(c: &Ctx) -> Result<Eqs> {
    let (n, q) = (c.ni(), c.p(S::Q)?);
    let lhs = sw(n, &q)? - sw(n - 1, &q)?;
    let rhs = (x() * dilate(&sw(n - 1, &q)?, &q)).scale(&-qpow(&q, n)?);
    eq(lhs, rhs)
}

fn s_lowupnsw(c: &Ctx) -> Result<Eqs> {
    let (n, q) = (c.ni(), c.p(S::Q)?);
    let p = sw(n, &q)?;
    let lhs = &p + &(sw(n + 1, &q)? - &p).scale(&qpow(&q, -n - 1)?);
    eq(lhs, dilate(&sw(n + 1, &q)?, &recip(&q)?))
}

fn s_lowdwnsw(c: &Ctx) -> Result<Eqs> {
    let (n, q) = (c.ni(), c.p(S::Q)?);
    let p = sw(n, &q)?;
    let lhs = &p - &(&p - sw(n - 1, &q)?).scale(&(int(1) - qpow(&q, -n)?));
    eq(lhs, dilate(&p, &recip(&q)?))
}

fn s_swnrf(c: &Ctx) -> Result<Eqs> {
    let (n, kk, q) = (c.ni(), c.k, c.p(S::Q)?);
    let qk = qpow(&q, -(kk as i64))?;
    let mut seq = Seq::new(move |m, th| Ok(dilate(&sw(m + kk as i64, th.get(S::Q)?)?, &qk)));
    for _ in 0..kk {
        seq = seq.apply(Op::NablaN).times(|m, th| pow(th.get(S::Q)?, -m));
    }
    let lhs = (xk(kk) * sw(n, &q)?).scale(&sign(kk));
    eq(lhs, seq.at(n, &c.th)?)
}

/// `S_n = σ_n (q;q)_n · ladder`, operator `j` being `q^{-m+j} Δ_n`, innermost `j` first.
fn swnrf2(c: &Ctx, signs: bool, js: Vec<i64>) -> Result<Eqs> {
    let (n, kk, q) = (c.ni(), c.ki(), c.p(S::Q)?);
    let qk = qpow(&q, kk)?;
    let mut seq = Seq::new(move |m, th| {
        if m < kk {
            return Ok(Poly::zero());
        }
        let q = th.get(S::Q)?;
        let s = if signs && m % 2 != 0 { int(-1) } else { int(1) };
        let pre = s * recip(&qpochhammer(q, q, (m - kk) as usize))?;
        Ok(dilate(&sw(m - kk, q)?, &qk).scale(&pre))
    });
    for j in js {
        seq = seq.apply(Op::DeltaN).times(move |m, th| pow(th.get(S::Q)?, j - m));
    }
    let s = if signs && n % 2 != 0 { int(-1) } else { int(1) };
    let rhs = seq.at(n, &c.th)?.scale(&(s * qpochhammer(&q, &q, c.n)));
    eq(sw(n, &q)?, rhs)
}

fn s_swnrf2(c: &Ctx) -> Result<Eqs> {
    let kk = c.ki();
    swnrf2(c, true, (1..=kk).rev().collect())
}

fn s_swnrf2_fixed(c: &Ctx) -> Result<Eqs> {
    let kk = c.ki();
    swnrf2(c, false, (0..kk).rev().collect())
}

fn s_swnrf2_step(c: &Ctx) -> Result<Eqs> {
    let (n, q) = (c.n, c.p(S::Q)?);
    let g = |m: usize| -> Result<Poly> {
        if m == 0 {
            return Ok(Poly::zero());
        }
        let pre = sign(m) * recip(&qpochhammer(&q, &q, m - 1))?;
        Ok(dilate(&sw(m as i64 - 1, &q)?, &q).scale(&pre))
    };
    let lhs = sw(n as i64, &q)?.scale(&(pow(&-q.clone(), n as i64)? * recip(&qpochhammer(&q, &q, n))?));
    eq(lhs, g(n + 1)? - g(n)?)
}

fn s_swnrf2_step_fixed(c: &Ctx) -> Result<Eqs> {
    let (n, q) = (c.n, c.p(S::Q)?);
    let g = |m: usize| -> Result<Poly> {
        if m == 0 {
            return Ok(Poly::zero());
        }
        Ok(dilate(&sw(m as i64 - 1, &q)?, &q).scale(&recip(&qpochhammer(&q, &q, m - 1))?))
    };
    let lhs = sw(n as i64, &q)?.scale(&(pow(&q, n as i64)? * recip(&qpochhammer(&q, &q, n))?));
    eq(lhs, g(n + 1)? - g(n)?)
}

fn s_qdiff(c: &Ctx) -> Result<Eqs> {
    let (n, q) = (c.ni(), c.p(S::Q)?);
    let p = sw(n, &q)?;
    let lhs = Poly::linear(int(-1), q.clone()) * &p + (x() * p.inverse_q_derivative(&q)?).scale(&(int(1) - &q));
    eq(lhs, dilate(&sw(n + 1, &q)?, &recip(&(&q * &q))?).scale(&q))
}

// ---------------------------------------------------------------- generic and relations

fn variant(c: &Ctx) -> Result<(FamilyId, usize)> {
    c.variant.ok_or_else(|| Error::InvalidParam("generic identity needs a family".into()))
}

fn g_sr1(c: &Ctx) -> Result<Eqs> {
    let (f, r) = variant(c)?;
    let (l, rr) = lc::structure_relation_sides(f, r, c.n, &c.th)?;
    eq(l, rr)
}

fn g_sl(c: &Ctx, form: SlForm, placement: SlPlacement) -> Result<Eqs> {
    let (f, r) = variant(c)?;
    let (l, rr) = lc::sturm_liouville_sides(f, r, c.n, &c.th, form, placement)?;
    eq(l, rr)
}

fn g_sl1(c: &Ctx) -> Result<Eqs> {
    g_sl(c, SlForm::SL1, SlPlacement::AsPrinted)
}

fn g_sl2(c: &Ctx) -> Result<Eqs> {
    g_sl(c, SlForm::SL2, SlPlacement::AsPrinted)
}

fn g_sl1_fixed(c: &Ctx) -> Result<Eqs> {
    g_sl(c, SlForm::SL1, SlPlacement::Consistent)
}

fn g_sl2_fixed(c: &Ctx) -> Result<Eqs> {
    g_sl(c, SlForm::SL2, SlPlacement::Consistent)
}

fn rel(c: &Ctx, r: Relation, reading: QPowerReading) -> Result<Eqs> {
    let (l, rr) = related_poly_with(r, c.n, &c.th, reading)?;
    eq(l, rr)
}

fn r_41(c: &Ctx) -> Result<Eqs> {
    rel(c, Relation::BigQLaguerreQMeixner, QPowerReading::OriginalBase)
}

fn r_42(c: &Ctx) -> Result<Eqs> {
    rel(c, Relation::LittleQLaguerreQLaguerre, QPowerReading::OriginalBase)
}

fn r_42_fixed(c: &Ctx) -> Result<Eqs> {
    rel(c, Relation::LittleQLaguerreQLaguerre, QPowerReading::InvertedBase)
}

fn r_43(c: &Ctx) -> Result<Eqs> {
    rel(c, Relation::QLaguerreQCharlier, QPowerReading::OriginalBase)
}

fn r_44(c: &Ctx) -> Result<Eqs> {
    rel(c, Relation::StieltjesWigertZeroLaguerre, QPowerReading::OriginalBase)
}

// ---------------------------------------------------------------- registry

struct B(Identity);

fn entry(
    id: &'static str,
    family: FamilyId,
    group: Group,
    paper_ref: &'static str,
    statement: &'static str,
    check: fn(&Ctx) -> Result<Eqs>,
) -> B {
    B(Identity {
        id,
        family: Some(family),
        group,
        paper_ref,
        printed: Reading { statement, n_min: 0, check },
        sampler: Sampler::Family(family),
        variants: &[],
        hypothesis: None,
        ladder: group == Group::Rodrigues,
        n_ge_k: false,
        erratum: None,
    })
}

impl B {
    fn n_ge_k(mut self) -> Self {
        self.0.n_ge_k = true;
        self
    }

    fn sampler(mut self, s: Sampler) -> Self {
        self.0.sampler = s;
        self
    }

    fn hypothesis(mut self, h: fn(&ParamPoint) -> bool) -> Self {
        self.0.hypothesis = Some(h);
        self
    }

    fn erratum(mut self, note: &'static str) -> Self {
        self.0.erratum = Some(Erratum { note, corrected: None });
        self
    }

    fn corrected(mut self, note: &'static str, statement: &'static str, n_min: usize, check: fn(&Ctx) -> Result<Eqs>) -> Self {
        self.0.erratum = Some(Erratum {
            note,
            corrected: Some(Reading { statement, n_min, check }),
        });
        self
    }

    fn unfamily(mut self) -> Self {
        self.0.family = None;
        self
    }

    fn variants(mut self, v: &'static [(FamilyId, usize)]) -> Self {
        self.0.variants = v;
        self.0.sampler = Sampler::Variants;
        self
    }
}

const N_GE_1: &str = "fails only at n = 0, where the p_{-1} = 0 convention makes the sides differ; the statement claims every n >= 0";

fn build() -> Vec<Identity> {
    use Group::*;
    use crate::families::Relation as Rel;
    const LAG_ROD: &str = "Laguerre: Rodrigues-type theorem";
    const CH: &str = "Charlier: ladder lemma";
    const CH_ROD: &str = "Charlier: Rodrigues-type theorem";
    const MX: &str = "Meixner: ladder lemma for beta and c";
    const MX_ROD: &str = "Meixner: Rodrigues-type theorem";
    const BQ: &str = "big q-Laguerre: ladder lemma";
    const BQ_ROD: &str = "big q-Laguerre: Rodrigues-type theorem";
    const LQ: &str = "little q-Laguerre: ladder lemma";
    const SWL: &str = "Stieltjes-Wigert: ladder lemma";
    const SW_ROD: &str = "Stieltjes-Wigert: Rodrigues-type theorem";
    let v = vec![
        // Laguerre
        entry("L.lownL", L, Lemma, "Laguerre ladder lemma (lownL)", "nabla_n L_n^(a) = L_n^(a-1)", l_lownl),
        entry("L.raiupnL", L, Lemma, "Laguerre ladder lemma (raiupnL)", "a L_n^(a) - (n+1) Delta_n L_n^(a) = x L_n^(a+1)", l_raiupnl),
        entry("L.raidonL", L, Lemma, "Laguerre ladder lemma (raidonL)", "a L_n^(a) - (n+a) nabla_n L_n^(a) = x L_{n-1}^(a+1)", l_raidonl),
        entry("L.lowaL", L, Lemma, "Laguerre ladder lemma (lowaL)", "nabla_a L_n^(a) = L_{n-1}^(a)", l_lowal),
        entry("L.raidoaL", L, Lemma, "Laguerre ladder lemma (raidoaL)", "(n+a-x) L_n^(a) - (a+n) nabla_a L_n^(a) = (n+1) L_{n+1}^(a-1)", l_raidoal),
        entry("L.raiupaL", L, Lemma, "Laguerre ladder lemma (raiupaL)", "(n+1+a-x) L_n^(a) - x Delta_a L_n^(a) = (n+1) L_{n+1}^(a)", l_raiupal),
        entry("L.LalRF", L, Rodrigues, LAG_ROD, "L_n^(a+k) = (a+k)_n / x^k (a+k)(a+k-1) nabla_a ... (a+1) a nabla_a [L_{n+k}^(a) / (a)_{n+k}]", l_lalrf)
            .corrected(
                "as printed the Pochhammer shifts are off by one: the prefactor must be (a+k+1)_n and the seed L_{n+k}^(a)/(a+1)_{n+k}, which is what the single-step form proves",
                "L_n^(a+k) = (a+k+1)_n / x^k (a+k)(a+k-1) nabla_a ... (a+1) a nabla_a [L_{n+k}^(a) / (a+1)_{n+k}]",
                0,
                l_lalrf_fixed,
            ),
        entry("L.LnRF", L, Rodrigues, LAG_ROD, "L_n^(a+k) = (-1)^k (a+1)_{n+k} / (n! x^k) nabla_n^k [n!/(a+1)_n L_n^(a)] at n+k", l_lnrf),
        entry("L.LalRF3", L, Rodrigues, LAG_ROD, "L_n^(a) = (-1)^k (n+1)_a / x^a Delta_a^k [x^a L_{n-k}^(a) / (n-k+1)_k], integer a", l_lalrf3)
            .sampler(Sampler::IntegerAlpha)
            .n_ge_k()
            .erratum("fails for k >= 1 at integer alpha; no single-parameter repair of the prefactor or seed was found, so the identity is reported as printed"),
        entry("L.LnRF2", L, Rodrigues, LAG_ROD, "L_n^(a) = Delta_n^k L_{n-k}^(a+k)", l_lnrf2).n_ge_k(),
        entry("L.LalRF2", L, Rodrigues, LAG_ROD, "L_n^(a+k) = Delta_a^k L_{n+k}^(a)", l_lalrf2),
        entry("L.thirdorder", L, Proposition, "Laguerre third-order proposition", "(n+1) L_{n+1}^(a+1) = (2+a-x) L + (3x-4-2a) L' + (2+a-3x) L'' + x L'''", l_thirdorder),
        entry("L.thirdorder.h1", L, Helper, "Laguerre proposition, first helper", "L_n^(a) - L_n^(a)' = L_n^(a+1)", l_thirdorder_h1),
        entry("L.thirdorder.h2", L, Helper, "Laguerre proposition, second helper", "x L_n^(a)' - (x-a) L_n^(a) = (n+1) L_{n+1}^(a-1)", l_thirdorder_h2),
        entry("L.sodeL1", L, Sode, "Laguerre parameter difference equation (sodeL1)", "n L = -(a+n) nabla_a Delta_a L + (a+n-x) Delta_a L", l_sode1),
        entry("L.sodeL2", L, Sode, "Laguerre parameter difference equation (sodeL2)", "n L = -x Delta_a nabla_a L + (a+n-x) nabla_a L", l_sode2),
        entry("L.LalRF.step", L, Step, "Laguerre Rodrigues theorem, single step of the alpha ladder", "n!/(a+k+1)_n L_n^(a+k) = (a+k)(a+k-1)/(x(n+1)) nabla_a [(n+1)!/(a+k)_{n+1} L_{n+1}^(a+k-1)]", l_lalrf_step).0.into_ladder(),
        entry("L.LnRF.step", L, Step, "Laguerre Rodrigues theorem, single step of the n ladder", "n!/(a+k+1)_n L_n^(a+k) = -(a+k)/x nabla_n [n!/(a+k)_n L_n^(a+k-1)] at n+1", l_lnrf_step).0.into_ladder(),
        // Charlier
        entry("C.rainC", C, Lemma, CH, "a Delta_n C_n(x;a) = -x C_n(x-1;a)", c_rainc),
        entry("C.lowDC", C, Lemma, CH, "n C_n(x;a) + a C_n'(x;a) = (n+1) C_{n-1}(x;a)", c_lowdc)
            .corrected(
                "the derivative must be taken in the parameter a, not in x, and the right-hand factor is n, not n+1",
                "n C_n(x;a) + a d/da C_n(x;a) = n C_{n-1}(x;a)",
                0,
                c_lowdc_fixed,
            ),
        entry("C.lowdonC", C, Lemma, CH, "(a-n) C_n(x;a) + n nabla_n C_n(x;a) = a C_n(x+1;a)", c_lowdonc),
        entry("C.lowupnC", C, Lemma, CH, "(a-n-1) C_n(x;a) + a Delta_n C_n(x;a) = a C_{n+1}(x+1;a)", c_lowupnc),
        entry("C.CnRF", C, Rodrigues, CH_ROD, "(x+1)_k C_n(x;a) = (-a)^k Delta_n^k C_n(x+k;a)", c_cnrf),
        entry("C.CnRF2", C, Rodrigues, CH_ROD, "C_n(x;a) = n!/a^n Delta_n^k [a^{n-k}/(n-k)! C_{n-k}(x-k;a)]", c_cnrf2).n_ge_k(),
        entry("C.CnRF2.step", C, Step, "Charlier Rodrigues theorem, proof identity", "(n+1)! Delta_n [a^n/n! C_n(x;a)] = a^{n+1} C_{n+1}(x+1;a)", c_cnrf2_step),
        // Meixner
        entry("M.rootnorm.rec", M, Recurrence, "Meixner normalized at -beta: recurrence", "(x+b) p_n = al_n p_{n+1} - (al_n+ga_n) p_n + ga_n p_{n-1}, p_n = c^n M_n", m_rootnorm_rec),
        entry("M.rootnorm.sl", M, Recurrence, "Meixner normalized at -beta: second-order forms", "(x+b) p_n = d_n^2 Delta_n (ga_n/d_n^2) nabla_n p_n = d_n^2 nabla_n (al_n/d_n^2) Delta_n p_n = ga_n nabla_n Delta_n p_n + (al_n - ga_n) Delta_n p_n", m_rootnorm_sl),
        entry("M.rainM", M, Lemma, MX, "b c/(c-1) Delta_n M_n(x;b,c) = x M_n(x-1;b+1,c)", m_rainm).hypothesis(lemma_meixner_hypothesis),
        entry("M.raiupnM", M, Lemma, MX, "M_n + c/(c-1) Delta_n M_n = (x+b)/b M_n(x;b+1,c)", m_raiupnm).hypothesis(lemma_meixner_hypothesis),
        entry("M.raidonM", M, Lemma, MX, "M_n + 1/(c-1) nabla_n M_n = (x+b)/b M_{n-1}(x;b+1,c)", m_raidonm)
            .hypothesis(lemma_meixner_hypothesis)
            .corrected(N_GE_1, "same identity for n >= 1", 1, m_raidonm),
        entry("M.lowbM", M, Lemma, MX, "c b(1-b)/(c-1) nabla_b M_n(x;b,c) = x n M_{n-1}(x-1;b+1,c)", m_lowbm).hypothesis(lemma_meixner_hypothesis),
        entry("M.raiupbM", M, Lemma, MX, "b(b-1)c/((b+n)(c-1)) M_{n+1}(x+1;b-1,c) = (x+b+b(b-1)/((b+n)(c-1))) M_n + (x+b) Delta_b M_n", m_raiupbm).hypothesis(lemma_meixner_hypothesis),
        entry("M.raidobM", M, Lemma, MX, "(b-1)(b-2)c/((b-1+n)(c-1)) M_{n+1}(x+1;b-2,c) = (x+b-1+(b-1)(b-2)/((b-1+n)(c-1))) M_n - (b-1)(b-2)/((b-1+n)(c-1)) nabla_b M_n", m_raidobm).hypothesis(lemma_meixner_hypothesis),
        entry("M.lowcM", M, Lemma, MX, "d/dc [c^n (b)_n M_n(x;b,c)] = n(x+b)/(c+n+b) c^n (b+1)_n M_{n-1}(x;b+1,c)", m_lowcm)
            .hypothesis(lemma_meixner_hypothesis)
            .corrected(
                "the right-hand side must be n(x+b) c^{n-1} (b+1)_{n-1} M_{n-1}(x;b+1,c), with no 1/(c+n+b) factor",
                "d/dc [c^n (b)_n M_n(x;b,c)] = n(x+b) c^{n-1} (b+1)_{n-1} M_{n-1}(x;b+1,c)",
                0,
                m_lowcm_fixed,
            ),
        entry("M.raidcM", M, Lemma, MX, "c(1-b) c^n (b)_n b M_{n+1}(x;b-1,c) = c(1-c) d/dc[c^n (b)_n M_n] - ((c-1)x+n-(n+1)c+cb) c^n (b)_n b M_n", m_raidcm)
            .hypothesis(lemma_meixner_hypothesis)
            .corrected(
                "the two stray factors b multiplying M_{n+1}(x;b-1,c) and M_n(x;b,c) must be dropped",
                "c(1-b) c^n (b)_n M_{n+1}(x;b-1,c) = c(1-c) d/dc[c^n (b)_n M_n] - ((c-1)x+n-(n+1)c+cb) c^n (b)_n M_n",
                0,
                m_raidcm_fixed,
            ),
        entry("M.MnRF", M, Rodrigues, MX_ROD, "M_n(x;b+k,c) = (b)_k c^k/((c-1)^k (x+1)_k) nabla_n^k M_{n+k}(x;b,c)", m_mnrf)
            .corrected(
                "the seed must be evaluated at x+k: each rainM step shifts x by one",
                "M_n(x;b+k,c) = (b)_k c^k/((c-1)^k (x+1)_k) nabla_n^k M_{n+k}(x+k;b,c)",
                0,
                m_mnrf_fixed,
            ),
        entry("M.MnRF2", M, Rodrigues, MX_ROD, "M_n(x;b+k,c) = (b)_k/((1-c)^k (x+b)_k (-c)^n) Delta_n^k (-c)^{n+k} M_{n+k}(x;b,c)", m_mnrf2)
            .corrected(
                "the ladder must act on c^n M_n (not (-c)^{n+k} M_{n+k}) at the same index n, with (c-1)^k c^n in the denominator; the raising step is raiupnM, not raidonM",
                "M_n(x;b+k,c) = (b)_k/((c-1)^k (x+b)_k c^n) Delta_n^k [c^n M_n(x;b,c)]",
                0,
                m_mnrf2_fixed,
            ),
        entry("M.MbRF", M, Rodrigues, MX_ROD, "M_n(x;b+k,c) = c^k/((c-1)^k (x+1)_k (n+1)_k) (b+k-1)(2-k-b) nabla_b ... b(1-b) nabla_b M_{n+k}(x+k;b,c)", m_mbrf),
        entry("M.McRF", M, Rodrigues, MX_ROD, "c^n (b+k)_n M_n(x;b+k,c) = (c+n+b+k)/((n+1)_k (x+b)_k) d/dc ... (c+n+b+k) d/dc c^{n+k} (b)_{n+k} M_{n+k}(x;b,c)", m_mcrf)
            .corrected(
                "the (c+n+b+k) factors inherit the lowcM misprint; iterating the corrected lowcM gives plain c-derivatives",
                "(n+1)_k (x+b)_k c^n (b+k)_n M_n(x;b+k,c) = d^k/dc^k [c^{n+k} (b)_{n+k} M_{n+k}(x;b,c)]",
                0,
                m_mcrf_fixed,
            ),
        entry("M.thirdorder", M, Proposition, "Meixner third-order proposition", "(bc+cx+c-x)/c M_n + (...)/((c-1)c) nabla M_n + c(...)/(c-1)^2 nabla^2 M_n + c^2(b+x+1)/(c-1)^2 nabla^3 M_n = (b+n)(b+n+1)/b M_{n+1}(x;b+1,c)", m_thirdorder)
            .erratum("fails as printed from n = 3 on; a least-squares refit of the four coefficients over several n did not produce a consistent correction, so no corrected reading is offered"),
        entry("M.sodeM", M, Sode, "Meixner parameter difference equation (sodeM)", "n x M_n = b(b-1)/(c-1) nabla_b Delta_b M_n - (b(b-1)/(c-1) + (b+x)(b+n)) Delta_b M_n", m_sodem),
        entry("M.MnRF2.step", M, Step, "Meixner Rodrigues theorem, single step of the second n ladder", "Delta_n (-c)^n M_n(x;b,c) = (x+b)/b (1-c) (-c)^n M_{n-1}(x;b+1,c)", m_mnrf2_step)
            .corrected(
                "the single step that the theorem actually iterates is the raising relation raiupnM rewritten for c^n M_n",
                "Delta_n [c^n M_n(x;b,c)] = (c-1)(x+b)/b c^n M_n(x;b+1,c)",
                0,
                m_mnrf2_step_fixed,
            ),
        // big q-Laguerre
        entry("bqL.rainbqL", BqL, Lemma, BQ, "phi(1) q^n Delta_n p_n(x;a,b) = (x-1) p_n(xq;aq,bq)", b_rainbql),
        entry("bqL.raiupnbqL", BqL, Lemma, BQ, "(a-1)(b-1) q^{n+1} p_{n+1}(x/q;a/q,b/q) = (abq^{n+1}-aq^{n+1}-bq^{n+1}+1) p_n + al_n Delta_n p_n", b_raiupnbql),
        entry("bqL.raidonbqL", BqL, Lemma, BQ, "(a-1)(b-1) q^{n+1} p_n(x/q;a/q,b/q) = q(abq^n-aq^n-bq^n+1) p_n + q^n ga_n nabla_n p_n", b_raidonbql)
            .corrected(
                "the factor q^n in front of ga_n must be dropped",
                "(a-1)(b-1) q^{n+1} p_n(x/q;a/q,b/q) = q(abq^n-aq^n-bq^n+1) p_n + ga_n nabla_n p_n",
                0,
                b_raidonbql_fixed,
            ),
        entry("bqL.lowabqL", BqL, Lemma, BQ, "(a-1) phi(1) D_{q,a} p_n(x;a,b) = a(1-q^n)/q^{n-1} (x-1) p_{n-1}(xq;aq,bq)", b_lowabql)
            .corrected(
                "as printed the parameters on the right are off: the lowered polynomial is p_{n-1}(xq;aq^2,bq) and the constants change accordingly",
                "(q-1)(1-aq)(1-aq^2)(1-bq) D_{q,a} p_n(x;a,b) = q^{2-n}(q^n-1)(x-1) p_{n-1}(xq;aq^2,bq)",
                0,
                b_lowabql_fixed,
            ),
        entry("bqL.raiupbbqL", BqL, Lemma, BQ, "(a-1) b q^{n+1}(aq-1) p_n(x;a/q,b) = (aq^{n+1}-1)(x-aq) D_{q,a} p_n + ((1-aq)(x-(a-b+ab)q^{n+1}) + (aq^{n+1}-1)(x-aq)) p_n", b_raiupbbql)
            .corrected(
                "holds with the plain q-difference p_n(x;qa,b) - p_n(x;a,b) in place of D_{q,a}",
                "(a-1) b q^{n+1}(aq-1) p_n(x;a/q,b) = (aq^{n+1}-1)(x-aq) [p_n(x;qa,b) - p_n(x;a,b)] + ((1-aq)(x-(a-b+ab)q^{n+1}) + (aq^{n+1}-1)(x-aq)) p_n",
                0,
                b_raiupbbql_fixed,
            ),
        entry("bqL.raidobbqL", BqL, Lemma, BQ, "(a-1)(aq-1)(bq^{n+1}-1) p_{n+1}(x;a/q,b) = (1-a) b (aq-1) q^{n+1} D_{1/q,a} p_n + (aq-1)(x+abq^{n+1}-a-bq^{n+1}) p_n", b_raidobbql)
            .corrected(
                "holds with the plain backward q-difference p_n(x;a,b) - p_n(x;a/q,b) in place of D_{1/q,a}",
                "(a-1)(aq-1)(bq^{n+1}-1) p_{n+1}(x;a/q,b) = (1-a) b (aq-1) q^{n+1} [p_n(x;a,b) - p_n(x;a/q,b)] + (aq-1)(x+abq^{n+1}-a-bq^{n+1}) p_n",
                0,
                b_raidobbql_fixed,
            ),
        entry("bqL.bqLnRF", BqL, Rodrigues, BQ_ROD, "p_n(q^k x;aq^k,bq^k) = (aq,bq;q)_k/(x;q)_k nabla_n^k p_{n+k}(x;a,b)", b_bqlnrf)
            .corrected(
                "iterating rainbqL gives a ladder of q^n Delta_n steps with sign (-1)^k, not a plain nabla_n^k",
                "p_n(q^k x;aq^k,bq^k) = (-1)^k (aq,bq;q)_k/(x;q)_k (q^n Delta_n)^k p_n(x;a,b)",
                0,
                b_bqlnrf_fixed,
            ),
        entry("bqL.bqLaRF", BqL, Rodrigues, BQ_ROD, "p_n(q^k x;aq^k,bq^k) = q^{nk} q^{(k+1)k/2} (bq;q)_k/(q^{n+1},x;q)_k (aq^{k-1}-1)(1-aq^k)/(aq^k) D_{q,a} ... (a-1)(1-aq)/(aq) D_{q,a} p_{n+k}(x;a,b)", b_bqlarf)
            .erratum("fails for k >= 1; it is built from lowabqL, which itself fails as printed, and no consistent repair of the step factors was found"),
        entry("bqL.fourthorder", BqL, Proposition, "big q-Laguerre fourth-order q-derivative proposition, read with c -> a and beta -> b", "(aq^{n+1}-1)(aq^{n+2}-1)(bq^{n+1}-1)(bq^{n+2}-1)/(q^{4n}(aq-1)(bq-1)) p_{n+1}(q^4 x;aq,bq) = sum_k p_k(x) D_q^k p_n(x;a,b)", b_fourthorder)
            .erratum("the printed prefactor uses c and beta, which the family does not have; read with a and b the identity fails from n = 0 on, and the residual is not a constant multiple of either side, so no corrected reading is offered"),
        entry("bqL.sodeM1", BqL, Sode, "big q-Laguerre parameter difference equation (sodeM1)", "(x-1) a (1-q^n) p_n = t_n D_{1/q,a} D_{q,a} p_n - (t_n - t*_n) D_{q,a} p_n", b_sode1)
            .erratum("fails as printed; it combines lowabqL, raiupbbqL and raidobbqL, whose printed forms fail, and no normalization of the operators makes it hold"),
        entry("bqL.sodeM2", BqL, Sode, "big q-Laguerre parameter difference equation (sodeM2)", "(x-1) a (1-q^n) p_n = t*_n D_{q,a} D_{1/q,a} p_n - (t_n - t*_n) D_{1/q,a} p_n", b_sode2)
            .erratum("fails as printed, for the same reason as sodeM1"),
        // little q-Laguerre
        entry("lqL.lownlql", LqL, Lemma, LQ, "q^{1-n} x/(aq-1) p_{n-1}(x;aq) = nabla_n p_n(x;a)", q_lownlql)
            .corrected(N_GE_1, "same identity for n >= 1", 1, q_lownlql),
        entry("lqL.lownuplql", LqL, Lemma, LQ, "(1-a)(x-1) p_n(x/q;a/q) = (aq^{n+1}-1) Delta_n p_n - (ax+1-a) p_n", q_lownuplql),
        entry("lqL.lowndolql", LqL, Lemma, LQ, "(1-a)(x-1) p_{n-1}(x/q;a/q) = (ax+(q^n-1)a) nabla_n p_n - (ax+1-a) p_n", q_lowndolql)
            .corrected(N_GE_1, "same identity for n >= 1", 1, q_lowndolql),
        entry("lqL.lowalqL", LqL, Lemma, LQ, "a(1-q^n) x/(q^{n-1}(1-a)(1-aq)) p_{n-1}(x;aq) = D_{1/q,a} p_n(x;a)", q_lowalql)
            .corrected(
                "holds with the plain backward q-difference p_n(x;a) - p_n(x;a/q) in place of D_{1/q,a}",
                "a(1-q^n) x/(q^{n-1}(1-a)(1-aq)) p_{n-1}(x;aq) = p_n(x;a) - p_n(x;a/q)",
                0,
                q_lowalql_fixed,
            ),
        entry("lqL.raiadolqL", LqL, Lemma, LQ, "(a-1) q^n (aq-1) p_n(x;a/q) = (aq^{n+1}-1) x D_{1/q,a} p_n + (aq(q^n-1)x + q^n(aq-1)(a-1)) p_n", q_raiadolql)
            .corrected(
                "holds with the plain forward q-difference p_n(x;qa) - p_n(x;a) in place of D_{1/q,a}",
                "(a-1) q^n (aq-1) p_n(x;a/q) = (aq^{n+1}-1) x [p_n(x;qa) - p_n(x;a)] + (aq(q^n-1)x + q^n(aq-1)(a-1)) p_n",
                0,
                q_raiadolql_fixed,
            ),
        entry("lqL.raiadolqL2", LqL, Lemma, LQ, "a(a-1) q^{n-1}(q^n-1) p_{n-1}(x;a/q) = (a-1)(x+aq^{2n-1}-aq^{n-1}) D_{q,a} p_n + (a(q^n-1)x + (1-a)aq^{n-1}(q^n-1)) p_n", q_raiadolql2)
            .corrected(
                "holds with the plain backward q-difference p_n(x;a) - p_n(x;a/q) in place of D_{q,a} and the left-hand side negated",
                "-a(a-1) q^{n-1}(q^n-1) p_{n-1}(x;a/q) = (a-1)(x+aq^{2n-1}-aq^{n-1}) [p_n(x;a) - p_n(x;a/q)] + (a(q^n-1)x + (1-a)aq^{n-1}(q^n-1)) p_n",
                0,
                q_raiadolql2_fixed,
            ),
        entry("lqL.fourthorder", LqL, Proposition, "little q-Laguerre fourth-order q-derivative proposition", "(aq^{n+1}-1)(aq^{n+2}-1)/(q^{3n}(q-1)(aq-1)) p_{n+1}(q^4 x;aq) = sum_k p_k(x) D_q^k p_n(x;a)", q_fourthorder)
            .erratum("fails as printed from n = 0 on; the residual is not removed by dropping the (q-1) factor or by any constant rescaling, so no corrected reading is offered"),
        entry("lqL.sodelqL1", LqL, Sode, "little q-Laguerre parameter difference equation (sodelqL1)", "aqx(q^n-1) p_n = s_n D_{1/q,a} D_{q,a} p_n - (s_n - s*_n) D_{q,a} p_n", q_sode1)
            .corrected(
                "holds with D_{q,a} and D_{1/q,a} read as the plain q-differences f(qa)-f(a) and f(a)-f(a/q)",
                "aqx(q^n-1) p_n = s_n nabla_{q,a} Delta_{q,a} p_n - (s_n - s*_n) Delta_{q,a} p_n",
                0,
                q_sode1_fixed,
            ),
        entry("lqL.sodelqL2", LqL, Sode, "little q-Laguerre parameter difference equation (sodelqL2)", "aqx(q^n-1) p_n = s*_n D_{q,a} D_{1/q,a} p_n - (s_n - s*_n) D_{1/q,a} p_n", q_sode2)
            .corrected(
                "holds with D_{q,a} and D_{1/q,a} read as the plain q-differences f(qa)-f(a) and f(a)-f(a/q)",
                "aqx(q^n-1) p_n = s*_n Delta_{q,a} nabla_{q,a} p_n - (s_n - s*_n) nabla_{q,a} p_n",
                0,
                q_sode2_fixed,
            ),
        // Stieltjes-Wigert
        entry("SW.rainSW", SW, Lemma, SWL, "nabla_n S_n(x) = -q^n x S_{n-1}(qx)", s_rainsw)
            .corrected(N_GE_1, "same identity for n >= 1", 1, s_rainsw),
        entry("SW.lowupnSW", SW, Lemma, SWL, "S_n(x) + q^{-n-1} Delta_n S_n(x) = S_{n+1}(x/q)", s_lowupnsw),
        entry("SW.lowdwnSW", SW, Lemma, SWL, "S_n(x) - (1-q^{-n}) nabla_n S_n(x) = S_n(x/q)", s_lowdwnsw),
        entry("SW.SWnRF", SW, Rodrigues, SW_ROD, "S_n(x) = (-x)^{-k} q^{-n} nabla_n ... q^{-n} nabla_n S_{n+k}(x/q^k)", s_swnrf),
        entry("SW.SWnRF2", SW, Rodrigues, SW_ROD, "S_n(x) = (-1)^n (q;q)_n q^{-n} Delta_n ... q^{-n+k} Delta_n [(-1)^n/(q;q)_{n-k} S_{n-k}(xq^k)]", s_swnrf2)
            .n_ge_k()
            .corrected(
                "the alternating signs must be dropped and the k exponents run from -n (outermost) to -n+k-1 (innermost)",
                "S_n(x) = (q;q)_n q^{-n} Delta_n q^{-n+1} Delta_n ... q^{-n+k-1} Delta_n [S_{n-k}(xq^k)/(q;q)_{n-k}]",
                0,
                s_swnrf2_fixed,
            ),
        entry("SW.qdiff", SW, Proposition, "Stieltjes-Wigert q-derivative proposition", "(q-x) S_n(x) + (1-q) x D_{1/q} S_n(x) = q S_{n+1}(x/q^2)", s_qdiff),
        entry("SW.SWnRF2.step", SW, Step, "Stieltjes-Wigert Rodrigues theorem, single step of the second ladder", "(-q)^n/(q;q)_n S_n(x) = Delta_n [(-1)^n/(q;q)_{n-1} S_{n-1}(xq)]", s_swnrf2_step)
            .corrected(
                "lowupnSW rewritten for the ladder gives the step without alternating signs",
                "q^n/(q;q)_n S_n(x) = Delta_n [S_{n-1}(xq)/(q;q)_{n-1}]",
                0,
                s_swnrf2_step_fixed,
            ),
        // generic
        entry("generic.sr1", L, Generic, "structure relation for a family with degree-one phi", "(x-c) p_n = al_n Delta_n p_n - ga_n Delta_n p_{n-1}", g_sr1)
            .unfamily()
            .variants(LINEAR_PEARSON_VARIANTS),
        entry("generic.SL1", L, Generic, "Sturm-Liouville difference form, first", "phi p_n = d_n^2 nabla_n (ga_n/d_n^2) Delta_n p_n", g_sl1)
            .unfamily()
            .variants(LINEAR_PEARSON_VARIANTS)
            .corrected(
                "with ga_n inside the bracket the form does not reduce to the structure relation; al_n belongs there (the placement the Meixner second-order forms use)",
                "phi p_n = d_n^2 nabla_n (al_n/d_n^2) Delta_n p_n",
                0,
                g_sl1_fixed,
            ),
        entry("generic.SL2", L, Generic, "Sturm-Liouville difference form, second", "phi p_n = d_n^2 Delta_n (al_n/d_n^2) nabla_n p_n", g_sl2)
            .unfamily()
            .variants(LINEAR_PEARSON_VARIANTS)
            .corrected(
                "with al_n inside the bracket the form does not reduce to the structure relation; ga_n belongs there (the placement the Meixner second-order forms use)",
                "phi p_n = d_n^2 Delta_n (ga_n/d_n^2) nabla_n p_n",
                0,
                g_sl2_fixed,
            ),
        // relations
        entry("rel.bqL-qM", BqL, Relation, "relation: big q-Laguerre in base 1/q and q-Meixner", Rel::BigQLaguerreQMeixner.statement(), r_41)
            .unfamily()
            .sampler(Sampler::Relation(Rel::BigQLaguerreQMeixner)),
        entry("rel.lqL-qL", LqL, Relation, "relation: little q-Laguerre in base 1/q and q-Laguerre", Rel::LittleQLaguerreQLaguerre.statement(), r_42)
            .unfamily()
            .sampler(Sampler::Relation(Rel::LittleQLaguerreQLaguerre))
            .corrected(
                "q^alpha must be evaluated in the inverted base: the little q-Laguerre parameter is 1/t, not t, when t = q^alpha",
                "p_n(x; (1/q)^alpha | 1/q) = (q;q)_n/(q^{alpha+1};q)_n L_n^(alpha)(-x;q)",
                0,
                r_42_fixed,
            ),
        entry("rel.qL-qC", QL, Relation, "relation: q-Laguerre and q-Charlier", Rel::QLaguerreQCharlier.statement(), r_43)
            .unfamily()
            .sampler(Sampler::Relation(Rel::QLaguerreQCharlier)),
        entry("rel.SW-0LB", SW, Relation, "relation: Stieltjes-Wigert in base 1/q and 0-Laguerre/Bessel", Rel::StieltjesWigertZeroLaguerre.statement(), r_44)
            .unfamily()
            .sampler(Sampler::Relation(Rel::StieltjesWigertZeroLaguerre)),
    ];
    v.into_iter().map(|b| b.0).collect()
}

impl From<B> for Identity {
    fn from(b: B) -> Self {
        b.0
    }
}

trait IntoLadder {
    fn into_ladder(self) -> B;
}

impl IntoLadder for Identity {
    fn into_ladder(mut self) -> B {
        self.ladder = true;
        B(self)
    }
}

/// The full registry, built once.
pub fn registry() -> &'static [Identity] {
    static REG: OnceLock<Vec<Identity>> = OnceLock::new();
    REG.get_or_init(build)
}

pub fn find(id: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::Unknown { kind: "identity", name: id.to_string() })
}
