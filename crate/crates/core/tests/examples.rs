//! Worked examples on the named fixtures, with values computed by hand or
//! by exhaustive lattice search and frozen here.

use primdec::decomp::{self, Kind, PrimeContext};
use primdec::modcore::{enumerate_submodules, fixtures, hom_space, is_isomorphic_simple, quotient, ModulePresentation, Submodule};
use primdec::oracle::{brute_force_decompositions, BruteKind, Instance, LatticeOracle, OracleCaps, Suite, Verdict};
use primdec::Caps;

fn sub(m: &ModulePresentation, vs: &[&[u8]]) -> Submodule {
    let vs: Vec<Vec<u8>> = vs.iter().map(|v| v.to_vec()).collect();
    m.closure(&vs).unwrap()
}

fn sorted(mut v: Vec<Submodule>) -> Vec<Submodule> {
    v.sort();
    v
}

#[test]
fn closure_and_intersection() {
    let b = fixtures::local();
    assert_eq!(sub(&b, &[&[0, 1]]), b.full_submodule());
    let d = fixtures::mixed();
    let x = sub(&d, &[&[0, 0, 1]]);
    let y = sub(&d, &[&[1, 0, 0], &[0, 1, 0]]);
    assert!(d.intersect(&x, &y).unwrap().is_zero());
}

#[test]
fn quotient_of_mixed_by_third_axis_is_uniform() {
    let d = fixtures::mixed();
    let q = quotient(&d, &sub(&d, &[&[0, 0, 1]])).unwrap();
    assert_eq!(q.module.dim(), 2);
    assert!(decomp::is_uniform(&q.module).unwrap());
}

#[test]
fn hom_space_between_distinct_simples_is_zero() {
    let c = fixtures::split();
    let s1 = c.restrict(&sub(&c, &[&[1, 0]])).unwrap();
    let s2 = c.restrict(&sub(&c, &[&[0, 1]])).unwrap();
    assert!(hom_space(&s1, &s2).unwrap().is_empty());
    assert!(!is_isomorphic_simple(&s1, &s2).unwrap());
}

#[test]
fn submodule_lattices() {
    let b = fixtures::local();
    assert_eq!(
        enumerate_submodules(&b, 1 << 10).unwrap(),
        vec![b.zero_submodule(), sub(&b, &[&[1, 0]]), b.full_submodule()]
    );
    let c = fixtures::split();
    assert_eq!(
        enumerate_submodules(&c, 1 << 10).unwrap(),
        vec![c.zero_submodule(), sub(&c, &[&[1, 0]]), sub(&c, &[&[0, 1]]), c.full_submodule()]
    );
}

#[test]
fn socles_and_essentiality() {
    let b = fixtures::local();
    assert_eq!(decomp::socle(&b).unwrap(), sub(&b, &[&[1, 0]]));
    assert!(decomp::is_essential(&b, &sub(&b, &[&[1, 0]])).unwrap());
    let c = fixtures::split();
    assert_eq!(decomp::socle(&c).unwrap(), c.full_submodule());
    assert!(!decomp::is_essential(&c, &sub(&c, &[&[1, 0]])).unwrap());
    let d = fixtures::mixed();
    assert_eq!(decomp::socle_decomposition(&d, 0).unwrap(), vec![sub(&d, &[&[1, 0, 0]]), sub(&d, &[&[0, 0, 1]])]);
    let all = decomp::socle_decompositions(&d, 1 << 10).unwrap();
    assert!(all.iter().any(|s| s.contains(&sub(&d, &[&[1, 0, 1]]))));
    assert_eq!(decomp::socle_decomposition(&b, 0).unwrap(), vec![sub(&b, &[&[1, 0]])]);
}

#[test]
fn uniform_dimensions() {
    assert!(decomp::is_uniform(&fixtures::local()).unwrap());
    assert_eq!(decomp::uniform_dimension(&fixtures::local()).unwrap(), 1);
    assert!(!decomp::is_uniform(&fixtures::mixed()).unwrap());
    assert_eq!(decomp::uniform_dimension(&fixtures::mixed()).unwrap(), 2);
}

#[test]
fn left_primes_and_associated_primes() {
    let mut ctx = PrimeContext::new();
    let b = fixtures::local();
    let whole = ctx.left_prime_of(&b).unwrap();
    let soc = ctx.left_prime_of(&b.restrict(&sub(&b, &[&[1, 0]])).unwrap()).unwrap();
    assert_eq!(whole, soc);

    let c = fixtures::split();
    let mut ctx = PrimeContext::new();
    let x1 = ctx.left_prime_of(&c.restrict(&sub(&c, &[&[1, 0]])).unwrap()).unwrap();
    let x2 = ctx.left_prime_of(&c.restrict(&sub(&c, &[&[0, 1]])).unwrap()).unwrap();
    assert_ne!(x1, x2);
    let as_c = ctx.associated_left_primes(&c).unwrap();
    assert_eq!((as_c.len(), as_c.total()), (2, 2));

    let as_d = PrimeContext::new().associated_left_primes(&fixtures::mixed()).unwrap();
    assert_eq!((as_d.len(), as_d.total()), (1, 2));

    let comm = fixtures::companion(2, &[0, 1, 1]);
    assert_eq!(PrimeContext::new().associated_left_primes(&comm).unwrap().len(), 2);
}

#[test]
fn primary_and_irreducible_status() {
    let d = fixtures::mixed();
    let mut ctx = PrimeContext::new();
    assert!(ctx.is_primary(&d, &d.zero_submodule()).unwrap().is_some());
    assert!(!decomp::is_irreducible(&d, &d.zero_submodule()).unwrap());
    let c = fixtures::split();
    assert!(PrimeContext::new().is_primary(&c, &c.zero_submodule()).unwrap().is_none());
}

#[test]
fn complements_in_mixed_fixture() {
    let d = fixtures::mixed();
    let e1 = sub(&d, &[&[1, 0, 0]]);
    let e3 = sub(&d, &[&[0, 0, 1]]);
    assert_eq!(decomp::complement(&d, &e1, &e3).unwrap(), e3);
    assert_eq!(decomp::enumerate_complements(&d, &e1, &e3, 1 << 10).unwrap(), vec![e3.clone()]);
    assert_eq!(
        decomp::enumerate_complements(&d, &e3, &e1, 1 << 10).unwrap(),
        vec![sub(&d, &[&[1, 0, 0], &[0, 1, 0]]), sub(&d, &[&[1, 0, 0], &[0, 1, 1]])]
    );
}

#[test]
fn shortest_primary_decompositions() {
    let d = fixtures::mixed();
    let zero = d.zero_submodule();
    let x = decomp::maximal_shortest_primary(&d, &zero, None).unwrap();
    assert_eq!(x.parts, vec![zero.clone()]);
    let all = decomp::enumerate_shortest_primary(&d, &zero, &Caps::default()).unwrap();
    assert_eq!(all.len(), 1);

    let c = fixtures::split();
    let expected = vec![sub(&c, &[&[1, 0]]), sub(&c, &[&[0, 1]])];
    let x = decomp::maximal_shortest_primary(&c, &c.zero_submodule(), None).unwrap();
    assert_eq!(x.canonical_parts(), expected);
    let all = decomp::enumerate_shortest_primary(&c, &c.zero_submodule(), &Caps::default()).unwrap();
    assert_eq!(all.len(), 1);
    let u = decomp::enumerate_shortest_uniform(&c, &c.zero_submodule(), &Caps::default()).unwrap();
    assert_eq!(u.len(), 1);
    assert_eq!(u[0].canonical_parts(), expected);
}

#[test]
fn shortest_uniform_decompositions_of_mixed_fixture() {
    let d = fixtures::mixed();
    let zero = d.zero_submodule();
    let e3 = sub(&d, &[&[0, 0, 1]]);
    let a = sub(&d, &[&[1, 0, 0], &[0, 1, 0]]);
    let b = sub(&d, &[&[1, 0, 0], &[0, 1, 1]]);
    let default = decomp::maximal_shortest_uniform(&d, &zero, None).unwrap();
    assert_eq!(default.canonical_parts(), sorted(vec![e3.clone(), a.clone()]));
    let alt = decomp::maximal_shortest_uniform(&d, &zero, Some(1)).unwrap();
    assert_eq!(alt.canonical_parts(), sorted(vec![e3.clone(), b.clone()]));

    let all = decomp::enumerate_shortest_uniform(&d, &zero, &Caps::default()).unwrap();
    assert_eq!(all.len(), 5);
    let maximal = decomp::enumerate_maximal_shortest_uniform(&d, &zero, &Caps::default()).unwrap();
    assert!(maximal.len() >= 2);
    assert!(all.iter().all(|x| x.kind == Kind::Uniform && x.flags.shortest));
}

#[test]
fn refinement_of_primary_decompositions() {
    let d = fixtures::mixed();
    let zero = d.zero_submodule();
    let r = decomp::refine_to_uniform(&d, &zero, std::slice::from_ref(&zero)).unwrap();
    assert_eq!(
        r.decomposition.canonical_parts(),
        sorted(vec![sub(&d, &[&[0, 0, 1]]), sub(&d, &[&[1, 0, 0], &[0, 1, 0]])])
    );
    assert_eq!(r.blocks, vec![vec![0, 1]]);

    let c = fixtures::split();
    let parts = vec![sub(&c, &[&[1, 0]]), sub(&c, &[&[0, 1]])];
    let r = decomp::refine_to_uniform(&c, &c.zero_submodule(), &parts).unwrap();
    assert_eq!(r.decomposition.parts, parts);
    assert_eq!(r.blocks, vec![vec![0], vec![1]]);
}

#[test]
fn check_reports() {
    let d = fixtures::mixed();
    let zero = d.zero_submodule();
    let parts = vec![sub(&d, &[&[0, 0, 1]]), sub(&d, &[&[1, 0, 0], &[0, 1, 0]])];
    let r = decomp::check_decomposition(&d, &zero, &parts, &Caps::default()).unwrap();
    assert!(r.intersects_to_base && r.is_uniform_decomposition && r.is_shortest_uniform);
    assert!(r.is_irredundant && r.is_primary_decomposition && r.cofactor_sum_direct);

    let r = decomp::check_decomposition(&d, &zero, &[zero.clone(), parts[0].clone()], &Caps::default()).unwrap();
    assert!(r.intersects_to_base && !r.is_irredundant);

    let r = decomp::check_decomposition(&d, &zero, std::slice::from_ref(&zero), &Caps::default()).unwrap();
    assert!(r.is_shortest_primary);
}

#[test]
fn brute_force_ground_truth() {
    let caps = OracleCaps::default();
    let c = fixtures::split();
    let mut o = LatticeOracle::new(&c, &caps).unwrap();
    let got = brute_force_decompositions(&mut o, &c.zero_submodule(), BruteKind::ShortestPrimary, caps.search).unwrap();
    assert_eq!(got, vec![vec![sub(&c, &[&[1, 0]]), sub(&c, &[&[0, 1]])]]);

    let d = fixtures::mixed();
    let mut o = LatticeOracle::new(&d, &caps).unwrap();
    let got = brute_force_decompositions(&mut o, &d.zero_submodule(), BruteKind::ShortestPrimary, caps.search).unwrap();
    assert_eq!(got, vec![vec![d.zero_submodule()]]);
    let uni = brute_force_decompositions(&mut o, &d.zero_submodule(), BruteKind::ShortestUniform, caps.search).unwrap();
    assert_eq!(uni.len(), 5);
}

#[test]
fn suites_on_fixtures() {
    let caps = OracleCaps::default();
    let r = primdec::oracle::verify_suite(&Instance::new(fixtures::mixed()), Suite::Clstunid, &caps);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.counts["brute_shortest"], r.counts["constructed_shortest"]);
    let r = primdec::oracle::verify_suite(&Instance::new(fixtures::companion(2, &[0, 1, 1])), Suite::CommCrosscheck, &caps);
    assert_eq!(r.verdict, Verdict::Pass);
    let r = primdec::oracle::verify_suite(&Instance::new(fixtures::local()), Suite::MultUV, &caps);
    assert_eq!(r.verdict, Verdict::Pass);
}
