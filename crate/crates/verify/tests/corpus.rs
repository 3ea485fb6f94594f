use std::path::PathBuf;

use chiefs::{Caps, GroupClass, PredicateId};
use chiefs_verify::runner::{run_entry, Suite};
use chiefs_verify::{run_corpus, Manifest, RunOptions, StatementId, Status};

fn corpus(file: &str) -> Manifest {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(file);
    Manifest::load(&path).unwrap()
}

fn only(suites: &[Suite], statements: &[StatementId]) -> RunOptions {
    RunOptions {
        suites: suites.to_vec(),
        statements: statements.to_vec(),
        ..RunOptions::default()
    }
}

#[test]
fn shipped_entries_regenerate_their_orders() {
    let m = corpus("corpus.toml");
    assert!(m.groups.len() >= 15);
    let mut orders = Vec::new();
    for e in &m.groups {
        let l = m.load_entry(e, Caps::default()).unwrap();
        assert_eq!(Some(l.group.order()), e.order, "{}", e.name);
        orders.push(l.group.order());
    }
    assert_eq!(orders.iter().min(), Some(&1));
    assert_eq!(orders.iter().max(), Some(&1875));
}

#[test]
fn example_entry_has_index_three_normalizer() {
    let m = corpus("corpus.toml");
    let e = m.groups.iter().find(|e| e.name == "ex12").unwrap();
    let l = m.load_entry(e, Caps::default()).unwrap();
    let g = &l.group;
    let a = g.subgroup(&g.generators()[..1]).unwrap();
    assert_eq!(g.order() / g.normalizer(&a).unwrap().order(), 3);
    let l1 = g.subgroup(&g.generators()[..2]).unwrap();
    let lat = g.normal_lattice().unwrap();
    let node = lat.node_of(&l1).unwrap();
    assert_eq!(l1.order(), 25);
    assert!(lat.is_cover(lat.bottom(), node));
}

#[test]
fn separating_row_is_verified() {
    let m = corpus("corpus.toml");
    let e = m.groups.iter().find(|e| e.name == "ex12").unwrap();
    let rows = run_entry(&m, e, &only(&[Suite::Statements], &[StatementId::Sep]));
    assert_eq!(rows.len(), 1);
    let r = &rows[0];
    assert_eq!(r.status, Status::Verified);
    assert_eq!(r.details["partial_pi"], true);
    assert_eq!(r.details["pi_property"], false);
    assert_eq!(r.details["witness_chain"], serde_json::json!([1, 25, 625, 1875]));
    let v = r.details["violations"].as_array().unwrap();
    assert!(v.iter().any(|v| v["index"] == 3 && v["d_order"] == 5));
}

#[test]
fn empty_manifest_gives_empty_summary() {
    let m = Manifest::parse("").unwrap();
    let r = run_corpus(&m, &RunOptions::default()).unwrap();
    assert_eq!(r.summary.groups, 0);
    assert!(r.rows.is_empty());
    assert_eq!(r.summary.counterexamples(), 0);
}

#[test]
fn report_rows_carry_the_schema_fields() {
    let m = corpus("corpus.toml");
    let e = m.groups.iter().find(|e| e.name == "s3").unwrap();
    let rows = run_entry(&m, e, &RunOptions::default());
    for r in rows {
        let v = serde_json::to_value(&r).unwrap();
        for key in ["statement", "group", "bindings", "status", "details", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key} missing in {v}");
        }
    }
}

/// ThmA fails for S5: with E = X = S5 and p in {3, 5} the
/// Sylow p-subgroups have order p, so their only maximal subgroup is
/// trivial and the hypothesis holds, yet S5 is neither p-supersolvable nor
/// quasisimple.
#[test]
fn thm_a_fails_on_s5() {
    let m = corpus("errata.toml");
    let e = m.groups.iter().find(|e| e.name == "s5").unwrap();
    let rows = run_entry(&m, e, &only(&[Suite::Statements], &[]));
    let bad: Vec<_> = rows.iter().filter(|r| r.status == Status::Counterexample).collect();
    let mut primes: Vec<&str> = bad.iter().map(|r| r.bindings["p"].as_str()).collect();
    primes.sort_unstable();
    assert_eq!(primes, ["3", "5"]);
    for r in &bad {
        assert_eq!(r.statement, "ThmA");
        assert_eq!(r.bindings["E"], r.bindings["X"]);
        assert!(r.bindings["E"].starts_with("120:"));
        assert_eq!(r.details["branch_1"], false);
        assert_eq!(r.details["branch_2"], false);
    }

    let g = m.load_entry(e, Caps::default()).unwrap().group;
    let whole = g.whole().unwrap();
    assert_eq!(g.derived_subgroup(&whole).unwrap().order(), 60);
    assert!(!g.group_class(GroupClass::Quasisimple).unwrap());
    for p in [3, 5] {
        assert!(!g.group_class(GroupClass::PSupersolvable(p)).unwrap());
        assert!(!g.group_class(GroupClass::PSolvable(p)).unwrap());
        let s = g.sylow(p).unwrap();
        assert_eq!(s.order(), p);
        let maxes = g.maximal_subgroups_of_p_group(&s).unwrap();
        assert!(maxes.iter().all(|m| m.is_trivial()));
        let trivial = g.trivial().unwrap();
        assert!(g.holds(&trivial, PredicateId::PartialPi).unwrap());
    }
}
