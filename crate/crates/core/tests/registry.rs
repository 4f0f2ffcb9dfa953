use lc_core::arith::{parse_rational, Symbol};
use lc_core::engine::{verify_all, verify_all_with, verify_identity, Ctx, ExecMode, Grid, Status, Suite};
use lc_core::families::{FamilyId, ParamPoint};
use lc_core::identities::{find, thirdorder_composed_operator, registry};
use lc_core::lc::{check_lc_membership, check_structure_relation, check_sturm_liouville, SlForm};

fn r(s: &str) -> lc_core::Rational {
    parse_rational(s).unwrap()
}

fn holds_at(id: &str, n: usize, th: ParamPoint) -> bool {
    let ident = find(id).unwrap();
    let ctx = Ctx { n, k: 0, th, variant: None };
    (ident.printed.check)(&ctx).unwrap().iter().all(|(l, r)| l == r)
}

#[test]
fn suite_sizes() {
    assert_eq!(lc_core::engine::select(registry(), Suite::Family(FamilyId::L)).len(), 14);
    assert_eq!(lc_core::engine::select(registry(), Suite::Family(FamilyId::SW)).len(), 6);
    let mut ids: Vec<_> = registry().iter().map(|i| i.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), registry().len(), "identity ids are unique");
}

#[test]
fn hand_checked_points() {
    let al = |v| ParamPoint::from_pairs([(Symbol::Alpha, r(v))]);
    assert!(holds_at("C.rainC", 0, ParamPoint::from_pairs([(Symbol::A, r("2"))])));
    assert!(holds_at("SW.rainSW", 1, ParamPoint::from_pairs([(Symbol::Q, r("2"))])));
    assert!(holds_at("L.sodeL1", 0, al("1/3")));
    assert!(holds_at("L.sodeL1", 2, al("1/3")));
    let lq = ParamPoint::from_pairs([(Symbol::A, r("1/3")), (Symbol::Q, r("2"))]);
    // as printed the q-derivative operators do not fit; the plain q-differences do
    assert!(!holds_at("lqL.sodelqL1", 1, lq.clone()));
    let fixed = find("lqL.sodelqL1").unwrap().erratum.as_ref().unwrap().corrected.as_ref().unwrap();
    let ctx = Ctx { n: 1, k: 0, th: lq, variant: None };
    assert!((fixed.check)(&ctx).unwrap().iter().all(|(l, r)| l == r));
}

#[test]
fn laguerre_suite_is_green() {
    let grid = Grid { n_max: 8, k_max: 3, samples: 3, seed: 11 };
    let reports = verify_all(registry(), Suite::Family(FamilyId::L), &grid);
    for rep in &reports {
        let ok = rep.status == Status::Pass
            || rep.erratum.as_ref().is_some_and(|e| e.first_failure.is_some());
        assert!(ok, "{}", rep.identity);
    }
    assert_eq!(find("L.thirdorder").map(|i| verify_identity(i, &grid).status).unwrap(), Status::Pass);
}

#[test]
fn thirdorder_is_the_composition_of_its_helpers() {
    for a in ["0", "1/3", "-7/2", "11"] {
        let (composed, direct) = thirdorder_composed_operator(&r(a));
        assert_eq!(composed, direct, "alpha = {a}");
    }
}

/// The three statements of the characterization theorem agree on every
/// registered degree-one family.
#[test]
fn characterization_statements_agree() {
    let pts = [
        (FamilyId::L, 0, vec![(Symbol::Alpha, "3/7")]),
        (FamilyId::C, 0, vec![(Symbol::A, "-5/2")]),
        (FamilyId::M, 0, vec![(Symbol::Beta, "4/3"), (Symbol::C, "2/9")]),
        (FamilyId::M, 1, vec![(Symbol::Beta, "4/3"), (Symbol::C, "2/9")]),
        (FamilyId::BqL, 0, vec![(Symbol::A, "1/5"), (Symbol::B, "-2/5"), (Symbol::Q, "3")]),
        (FamilyId::LqL, 0, vec![(Symbol::A, "5/4"), (Symbol::Q, "-1/2")]),
        (FamilyId::SW, 0, vec![(Symbol::Q, "7/5")]),
    ];
    for (fam, root, pairs) in pts {
        let th = ParamPoint::from_pairs(pairs.into_iter().map(|(s, v)| (s, r(v))));
        let lc_ok = check_lc_membership(fam, root, &th, 12).unwrap().pass;
        let sr_ok = (0..=8).all(|n| check_structure_relation(fam, root, n, &th).unwrap().is_zero());
        let sl_ok = (0..=8).all(|n| {
            [SlForm::SL1, SlForm::SL2]
                .iter()
                .all(|&f| check_sturm_liouville(fam, root, n, &th, f).unwrap().is_zero())
        });
        assert!(lc_ok && sr_ok && sl_ok, "{fam}#{root}: lc {lc_ok} sr {sr_ok} sl {sl_ok}");
    }
}

#[test]
fn execution_modes_give_identical_reports() {
    let grid = Grid { n_max: 5, k_max: 2, samples: 2, seed: 42 };
    let a = verify_all_with(registry(), Suite::Family(FamilyId::C), &grid, ExecMode::Sequential);
    let b = verify_all_with(registry(), Suite::Family(FamilyId::C), &grid, ExecMode::Parallel);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
