//! Worked examples on the reference model, through the public API.

use cpm_core::checker::{check_agm, check_theorems, formula_pool, random_cpm, FormulaPool, RandomModelSpec};
use cpm_core::fixtures::{fig1, FIG1_MODEL};
use cpm_core::format::{dump_cpm, parse_model, LoadedModel};
use cpm_core::imaging::{check_imaging_agreement, image, SelectionPolicy};
use cpm_core::logic::{dnf_of_worlds, entails};
use cpm_core::simulation::{AdmissibleSequence, CharacterizingFamily};
use cpm_core::{
    parse_formula, CpmModel, EpistemicStatus, Error, Formula, PossibilityModel, Vocabulary, WorldDistribution, WorldSet,
};

const EPS: f64 = 1e-9;

fn abc() -> Vocabulary {
    Vocabulary::new(["A", "B", "C"]).unwrap()
}

fn f(m: &CpmModel, s: &str) -> Formula {
    parse_formula(s, m.vocab()).unwrap()
}

fn ws(v: &Vocabulary, worlds: &[&str]) -> WorldSet {
    WorldSet::from_worlds(v.world_count(), worlds.iter().map(|w| v.parse_world(w).unwrap()))
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= EPS
}

#[test]
fn parsing() {
    let v = abc();
    assert_eq!(
        parse_formula("~A & B", &v).unwrap(),
        Formula::and(Formula::not(Formula::atom(0)), Formula::atom(1))
    );
    assert_eq!(
        parse_formula("A -> B -> C", &v).unwrap(),
        Formula::implies(Formula::atom(0), Formula::implies(Formula::atom(1), Formula::atom(2)))
    );
    assert!(matches!(parse_formula("A && B", &v), Err(Error::Syntax { position: 3, .. })));
}

#[test]
fn evaluation_and_models() {
    let v = abc();
    let p = |s: &str| parse_formula(s, &v).unwrap();
    assert!(p("~A & B").eval(v.parse_world("~A B C").unwrap()));
    assert!(v.worlds().all(|w| p("true").eval(w)));
    assert!(!p("A -> B").eval(v.parse_world("A ~B ~C").unwrap()));
    assert_eq!(p("~A & B").models(&v), ws(&v, &["~A B C", "~A B ~C"]));
    assert!(p("false").models(&v).is_empty());
    assert_eq!(p("A | ~A").models(&v).count(), 8);
}

#[test]
fn entailment_and_dnf() {
    let v = abc();
    let p = |s: &str| parse_formula(s, &v).unwrap();
    let set = ws(&v, &["~A B C", "~A B ~C"]);
    assert!(entails(&set, &p("B"), &v));
    assert!(entails(&v.no_worlds(), &p("false"), &v));
    assert!(!entails(&set, &p("C"), &v));
    let d = dnf_of_worlds(&set, &v);
    assert_eq!(d.models(&v), p("~A & B").models(&v));
    assert_eq!(dnf_of_worlds(&v.no_worlds(), &v), Formula::False);
    assert_eq!(dnf_of_worlds(&v.all_worlds(), &v).models(&v), v.all_worlds());
}

#[test]
fn belief_set_and_measures() {
    let m = fig1();
    let v = m.vocab().clone();
    let b = m.base();
    assert_eq!(b.belief_worlds(), &ws(&v, &["~A B C", "~A B ~C"]));
    let uniform = PossibilityModel::new(v.clone(), vec![1.0; 8]).unwrap();
    assert_eq!(uniform.belief_worlds(), &v.all_worlds());
    let mut single = vec![0.0; 8];
    single[5] = 1.0;
    let single = PossibilityModel::new(v.clone(), single).unwrap();
    assert_eq!(single.belief_worlds().count(), 1);

    assert!(b.believes(&f(&m, "B")) && b.believes(&f(&m, "~A")) && b.believes(&f(&m, "true")));
    assert!(!b.believes(&f(&m, "C")));
    assert_eq!(b.pl(&f(&m, "A")), ws(&v, &["A B C", "A B ~C"]));
    assert_eq!(&b.pl(&f(&m, "true")), b.belief_worlds());
    assert_eq!(b.pi_measure(&f(&m, "A")), 0.6);
    assert_eq!(b.pi_measure(&f(&m, "~B")), 0.4);
    assert_eq!(b.pi_measure(&f(&m, "C")), 1.0);
    assert_eq!(b.pi_measure(&f(&m, "~B & ~C")), 0.0);
    assert!(close(b.necessity(&f(&m, "B")), 0.6));
    assert!(close(b.necessity(&f(&m, "~A")), 0.4));
    assert_eq!(b.necessity(&f(&m, "C")), 0.0);
}

#[test]
fn conditionals_and_revision() {
    let m = fig1();
    let v = m.vocab().clone();
    let b = m.base();
    assert!(b.conditional(&f(&m, "A"), &f(&m, "B")));
    assert!(!b.conditional(&f(&m, "A"), &f(&m, "C")));
    assert!(!b.conditional(&f(&m, "A"), &f(&m, "~C")));
    assert!(b.conditional(&f(&m, "false"), &f(&m, "false")));
    assert_eq!(b.revised_belief_worlds(&f(&m, "A")), ws(&v, &["A B C", "A B ~C"]));
    assert_eq!(&b.revised_belief_worlds(&f(&m, "~A")), b.belief_worlds());
    assert!(b.revised_belief_worlds(&f(&m, "false")).is_empty());
    assert_eq!(b.status(&f(&m, "B")), EpistemicStatus::Accepted);
    assert_eq!(b.status(&f(&m, "A")), EpistemicStatus::Rejected);
    assert_eq!(b.status(&f(&m, "C")), EpistemicStatus::Indeterminate);
}

#[test]
fn probabilities() {
    let m = fig1();
    assert_eq!(m.counterfactual_prob(&f(&m, "B"), &f(&m, "A")).unwrap(), 1.0);
    assert!(close(m.counterfactual_prob(&f(&m, "C"), &f(&m, "A")).unwrap(), 2.0 / 3.0));
    assert!(m.counterfactual_prob(&f(&m, "C"), &f(&m, "~B & ~C")).unwrap_err().is_undefined());
    assert!(close(m.factual_prob(&f(&m, "C")), 0.625));
    assert_eq!(m.factual_prob(&f(&m, "B")), 1.0);
    assert_eq!(m.factual_prob(&f(&m, "A")), 0.0);
    assert!(close(m.conditional_prob(&f(&m, "C"), &f(&m, "B")).unwrap(), 0.625));
    assert!(close(m.conditional_prob(&f(&m, "C"), &f(&m, "C")).unwrap(), 1.0));
    assert!(m.conditional_prob(&f(&m, "C"), &f(&m, "A")).unwrap_err().is_undefined());
}

#[test]
fn revised_distributions() {
    let m = fig1();
    let v = m.vocab().clone();
    let r = m.revise(&f(&m, "A")).unwrap();
    assert!(close(r.mass(v.parse_world("A B C").unwrap()), 0.08));
    assert!(close(r.mass(v.parse_world("A B ~C").unwrap()), 0.04));
    assert!(close(r.probability(&f(&m, "C")), 2.0 / 3.0));
    assert_eq!(m.revise(&f(&m, "true")).unwrap().normalized(), m.factual_distribution().normalized());
    assert!(close(m.revise(&f(&m, "~A")).unwrap().probability(&f(&m, "C")), 0.625));
}

#[test]
fn natural_revision() {
    let m = fig1();
    let v = m.vocab().clone();
    let n = m.natural_revision(&f(&m, "A"), CpmModel::DEFAULT_DEMOTION).unwrap();
    let degree = |w: &str| n.base().degree(v.parse_world(w).unwrap());
    assert_eq!(degree("A B C"), 1.0);
    assert_eq!(degree("A B ~C"), 1.0);
    assert!(close(degree("~A B C"), 0.5) && close(degree("~A B ~C"), 0.5));
    assert!(close(degree("A ~B C"), 0.2) && close(degree("~A ~B C"), 0.2));
    assert!(close(n.factual_prob(&f(&m, "C")), 2.0 / 3.0));

    let t = m.natural_revision(&f(&m, "true"), CpmModel::DEFAULT_DEMOTION).unwrap();
    assert_eq!(t.base().belief_worlds(), m.base().belief_worlds());
    assert!(close(t.factual_prob(&f(&m, "C")), m.factual_prob(&f(&m, "C"))));

    let back = n.natural_revision(&f(&m, "~A"), CpmModel::DEFAULT_DEMOTION).unwrap();
    assert!(back.base().believes(&f(&m, "~A")));
}

#[test]
fn admissible_sequence() {
    let m = fig1();
    let seq = AdmissibleSequence::build(&m);
    let ranks: Vec<f64> = seq.entries().iter().map(|e| e.rank).collect();
    assert_eq!(ranks, vec![1.0, 0.6, 0.4]);
    assert!(close(seq.entries()[0].dist.total(), 0.8));
    assert!(seq.is_admissible());
    assert_eq!(seq.most_possible_function(&f(&m, "A")), Some(0.6));
    assert_eq!(seq.most_possible_function(&f(&m, "true")), Some(1.0));
    assert_eq!(seq.most_possible_function(&f(&m, "~B & ~C")), None);
    assert!(close(seq.revise(&f(&m, "A"), &f(&m, "C")).unwrap(), 2.0 / 3.0));
    assert!(close(seq.revise(&f(&m, "true"), &f(&m, "C")).unwrap(), 0.625));
    assert!(seq.revise(&f(&m, "~B & ~C"), &f(&m, "A")).unwrap_err().is_undefined());

    let one = random_cpm(RandomModelSpec { seed: 2, atoms: 3, ranks: 1, complete: true });
    assert_eq!(AdmissibleSequence::build(&one).entries().len(), 1);
}

#[test]
fn characterizing_family() {
    let m = fig1();
    let v = m.vocab().clone();
    let fam = CharacterizingFamily::build(&m);
    let alphas: Vec<WorldSet> = fam.entries().iter().map(|e| e.alpha.models(&v)).collect();
    assert_eq!(alphas, vec![f(&m, "~A & B").models(&v), f(&m, "A & B").models(&v), f(&m, "~B & C").models(&v)]);
    assert!(fam.is_disjoint());
    assert!(entails(&alphas[0], &Formula::not(fam.entries()[1].alpha.clone()), &v));
    assert_eq!(fam.alpha_for(&f(&m, "A")), Some(&fam.entries()[1].alpha));
    assert_eq!(fam.alpha_for(&f(&m, "C")), Some(&fam.entries()[0].alpha));
    assert_eq!(fam.alpha_for(&f(&m, "~B & ~C")), None);
    assert!(close(fam.revise(&f(&m, "A"), &f(&m, "C")).unwrap(), 2.0 / 3.0));
    assert!(close(fam.revise(&f(&m, "true"), &f(&m, "C")).unwrap(), 0.625));
    assert!(fam.revise(&f(&m, "false"), &f(&m, "C")).unwrap_err().is_undefined());

    let one = random_cpm(RandomModelSpec { seed: 2, atoms: 3, ranks: 1, complete: true });
    let fam1 = CharacterizingFamily::build(&one);
    assert_eq!(fam1.entries().len(), 1);
    assert_eq!(fam1.entries()[0].alpha_models(), &one.vocab().all_worlds());
}

#[test]
fn selection_and_imaging() {
    let m = fig1();
    let v = m.vocab().clone();
    let a = f(&m, "A");
    let pl_a = ws(&v, &["A B C", "A B ~C"]);
    let w = |s: &str| v.parse_world(s).unwrap();
    assert_eq!(SelectionPolicy::Centered.select(&m, w("A B C"), &a).unwrap(), ws(&v, &["A B C"]));
    assert_eq!(SelectionPolicy::Centered.select(&m, w("~A B C"), &a).unwrap(), pl_a);
    for x in v.worlds() {
        assert_eq!(SelectionPolicy::PlUniform.select(&m, x, &a).unwrap(), pl_a);
    }

    let factual = m.factual_distribution();
    let imaged = image(&factual, &SelectionPolicy::PlUniform, &m, &a).unwrap();
    let n = imaged.normalized();
    assert!(close(n[w("A B C").index()], 2.0 / 3.0) && close(n[w("A B ~C").index()], 1.0 / 3.0));
    let kept = image(&factual, &SelectionPolicy::Centered, &m, &f(&m, "~A")).unwrap();
    assert!(kept.max_deviation(&factual) <= EPS);
    let point = WorldDistribution::point(&v, w("~A B ~C"));
    let moved = image(&point, &SelectionPolicy::PlUniform, &m, &f(&m, "A & C")).unwrap();
    assert!(close(moved.mass(w("A B C")), 1.0));

    assert!(check_imaging_agreement(&m, &a, &SelectionPolicy::PlUniform).unwrap().pass);
    let not_a = check_imaging_agreement(&m, &f(&m, "~A"), &SelectionPolicy::Centered).unwrap();
    assert!(not_a.pass);
    assert!(close(not_a.imaged.probability(&f(&m, "C")), 0.625));
    assert!(check_imaging_agreement(&m, &a, &SelectionPolicy::Centered).unwrap().pass);
}

#[test]
fn formula_pools() {
    let v = Vocabulary::new(["A", "B"]).unwrap();
    let pool = FormulaPool::new(&v, 1, 0, 0);
    for s in ["A", "~A", "B", "~B", "true", "false"] {
        let models = parse_formula(s, &v).unwrap().models(&v);
        assert!(pool.entries().iter().any(|e| e.models == models), "{s}");
    }
    let deep = formula_pool(&v, 3, 4);
    let a = parse_formula("~~A", &v).unwrap().models(&v);
    assert_eq!(deep.entries().iter().filter(|e| e.models == a).count(), 1);
    assert_eq!(deep, formula_pool(&v, 3, 4));
}

#[test]
fn suites_on_the_reference_model() {
    let m = fig1();
    let pool = formula_pool(m.vocab(), 2, 0);
    let agm = check_agm(m.base(), &pool, "fig1");
    assert!(agm.passed(), "{}", agm.render_text());
    assert!(agm.claims["agm.below_possible"].notes > 0);
    let theorems = check_theorems(&m, &pool, 0, "fig1");
    assert!(theorems.passed(), "{}", theorems.render_text());

    let v = abc();
    let uniform = PossibilityModel::new(v.clone(), vec![1.0; 8]).unwrap();
    let upool = formula_pool(&v, 2, 0);
    assert!(check_agm(&uniform, &upool, "uniform").passed());
    for e in upool.entries().iter().filter(|e| !e.models.is_empty()) {
        assert_eq!(uniform.revised_set(&e.models), e.models);
    }
}

#[test]
fn generated_models() {
    let spec = RandomModelSpec { seed: 12, atoms: 4, ranks: 3, complete: false };
    assert_eq!(dump_cpm(&random_cpm(spec)), dump_cpm(&random_cpm(spec)));
    let one = random_cpm(RandomModelSpec { seed: 13, atoms: 3, ranks: 1, complete: true });
    let pool = formula_pool(one.vocab(), 2, 13);
    for a in pool.entries().iter().filter(|e| !e.models.is_empty()) {
        for b in pool.entries() {
            let r = one.counterfactual_set(&b.models, &a.models).unwrap();
            let c = one.conditional_prob_set(&b.models, &a.models).unwrap();
            assert!(close(r, c));
        }
    }
}

#[test]
fn model_files() {
    assert_eq!(parse_model(FIG1_MODEL).unwrap(), LoadedModel::Cpm(fig1()));
    assert!(matches!(
        parse_model("atoms A B C\nworld A B C pi=0.9 p=1\n"),
        Err(Error::Validation { ref reason, .. }) if reason == "no world with pi=1"
    ));
    assert!(matches!(
        parse_model("atoms A B C\nworld A B C pi=1 p=1\nworld A B C pi=1 p=1\n"),
        Err(Error::Validation { line: 3, ref reason }) if reason.contains("duplicate")
    ));
}
