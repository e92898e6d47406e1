use std::collections::BTreeMap;

use graph_core::catalog::{corpus, hmn, line, rose_cohn, rose_leavitt};
use graph_core::BiSepGraph;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rewrite_algebra::{path_mul, q, AlgElem, Algebra, GenPath, Letter, Q};

fn letter(alg: &Algebra, name: &str) -> Letter {
    let gr = alg.graph().graph();
    match name.strip_suffix('*') {
        Some(e) => Letter::Ghost(gr.edge_index(e).unwrap() as u32),
        None => Letter::Edge(gr.edge_index(name).unwrap() as u32),
    }
}

fn word(alg: &Algebra, names: &[&str]) -> AlgElem {
    let letters = names.iter().map(|n| letter(alg, n)).collect();
    AlgElem::from_path(GenPath::word(alg.graph().graph(), letters).unwrap())
}

fn vertex(alg: &Algebra, name: &str) -> AlgElem {
    alg.vertex(alg.graph().graph().vertex_index(name).unwrap())
}

// ---------------------------------------------------------------------------
// Independent oracle: rewrite the leftmost forbidden two-letter subword of
// any monomial until none remains. The forbidden words and their
// right-hand sides are derived here directly from the relations.
// ---------------------------------------------------------------------------

type Mono = (usize, Vec<Letter>);

fn first_common_col(g: &BiSepGraph, x: usize, x2: usize) -> Option<usize> {
    (0..g.cols().len()).find(|&y| g.meet(x, y).is_some() && g.meet(x2, y).is_some())
}

fn first_common_row(g: &BiSepGraph, y: usize, y2: usize) -> Option<usize> {
    (0..g.rows().len()).find(|&x| g.meet(x, y).is_some() && g.meet(x, y2).is_some())
}

/// If `a b` is the distinguished monomial of a relation, the relation
/// solved for it: a list of (coefficient, replacement word).
fn oracle_rule(g: &BiSepGraph, a: Letter, b: Letter) -> Option<Vec<(Q, Vec<Letter>)>> {
    match (a, b) {
        (Letter::Edge(e), Letter::Ghost(f)) => {
            let (x, x2) = (g.row_of(e as usize), g.row_of(f as usize));
            if !(g.in_s(x) && g.in_s(x2)) {
                return None;
            }
            let y = g.col_of(e as usize);
            if g.col_of(f as usize) != y || first_common_col(g, x, x2) != Some(y) {
                return None;
            }
            // Σ_Y (XY)(X'Y)* = δ s(X)
            let mut rhs = Vec::new();
            if x == x2 {
                rhs.push((Q::one(), vec![]));
            }
            for y1 in 0..g.cols().len() {
                if let (Some(e1), Some(f1), true) = (g.meet(x, y1), g.meet(x2, y1), y1 != y) {
                    rhs.push((-Q::one(), vec![Letter::Edge(e1 as u32), Letter::Ghost(f1 as u32)]));
                }
            }
            Some(rhs)
        }
        (Letter::Ghost(e), Letter::Edge(f)) => {
            let (y, y2) = (g.col_of(e as usize), g.col_of(f as usize));
            if !(g.in_t(y) && g.in_t(y2)) {
                return None;
            }
            let x = g.row_of(e as usize);
            if g.row_of(f as usize) != x || first_common_row(g, y, y2) != Some(x) {
                return None;
            }
            let mut rhs = Vec::new();
            if y == y2 {
                rhs.push((Q::one(), vec![]));
            }
            for x1 in 0..g.rows().len() {
                if let (Some(e1), Some(f1), true) = (g.meet(x1, y), g.meet(x1, y2), x1 != x) {
                    rhs.push((-Q::one(), vec![Letter::Ghost(e1 as u32), Letter::Edge(f1 as u32)]));
                }
            }
            Some(rhs)
        }
        _ => None,
    }
}

fn oracle_nf(g: &BiSepGraph, a: &AlgElem) -> AlgElem {
    let mut work: BTreeMap<Mono, Q> = BTreeMap::new();
    for (p, c) in a.terms() {
        *work.entry((p.source(), p.letters().to_vec())).or_insert_with(Q::zero) += c;
    }
    loop {
        let mut next: BTreeMap<Mono, Q> = BTreeMap::new();
        let mut changed = false;
        for ((src, w), c) in work {
            if c.is_zero() {
                continue;
            }
            let hit = (0..w.len().saturating_sub(1)).find_map(|i| oracle_rule(g, w[i], w[i + 1]).map(|r| (i, r)));
            match hit {
                None => *next.entry((src, w)).or_insert_with(Q::zero) += c,
                Some((i, rhs)) => {
                    changed = true;
                    for (k, mid) in rhs {
                        let mut nw = w[..i].to_vec();
                        nw.extend(mid);
                        nw.extend_from_slice(&w[i + 2..]);
                        *next.entry((src, nw)).or_insert_with(Q::zero) += &c * &k;
                    }
                }
            }
        }
        work = next;
        if !changed {
            break;
        }
    }
    let gr = g.graph();
    work.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((src, w), c)| {
            let p = if w.is_empty() { GenPath::vertex(src) } else { GenPath::word(gr, w).unwrap() };
            (c, p)
        })
        .collect()
}

/// A random element: a few random walks in the double graph with small
/// integer coefficients.
fn random_elem(alg: &Algebra, rng: &mut ChaCha8Rng, terms: usize, max_len: usize) -> AlgElem {
    let gr = alg.graph().graph();
    let letters = alg.letters();
    let mut out = AlgElem::zero();
    for _ in 0..terms {
        let start = rng.gen_range(0..gr.vertex_count());
        let len = rng.gen_range(0..=max_len);
        let mut w = Vec::new();
        let mut at = start;
        for _ in 0..len {
            let opts: Vec<Letter> = letters.iter().copied().filter(|l| l.source(gr) == at).collect();
            if opts.is_empty() {
                break;
            }
            let l = opts[rng.gen_range(0..opts.len())];
            at = l.range(gr);
            w.push(l);
        }
        let p = if w.is_empty() { GenPath::vertex(start) } else { GenPath::word(gr, w).unwrap() };
        out.add_term(q(rng.gen_range(-3..=3)), p);
    }
    out
}

fn fixtures() -> Vec<(&'static str, Algebra)> {
    corpus().into_iter().map(|(n, g)| (n, Algebra::new(g))).collect()
}

// ---------------------------------------------------------------------------
// Examples
// ---------------------------------------------------------------------------

#[test]
fn path_mul_examples() {
    let alg = Algebra::new(line(2));
    let gr = alg.graph().graph();
    let (v1, v2) = (GenPath::vertex(0), GenPath::vertex(1));
    assert_eq!(path_mul(&v1, &v1), Some(v1.clone()));
    assert_eq!(path_mul(&v1, &v2), None);
    let e = GenPath::letter(gr, Letter::Edge(0));
    let es = GenPath::letter(gr, Letter::Ghost(0));
    let ees = path_mul(&e, &es).unwrap();
    assert_eq!(ees.letters(), &[Letter::Edge(0), Letter::Ghost(0)]);
    assert_eq!(path_mul(&e, &e), None);
    assert_eq!(path_mul(&v1, &e), Some(e.clone()));
    assert_eq!(path_mul(&e, &v2), Some(e));
}

#[test]
fn leavitt_rose_two_examples() {
    let alg = Algebra::new(rose_leavitt(2));
    let v = vertex(&alg, "v");
    let nf = alg.nf(&word(&alg, &["e1", "e1*"]));
    assert_eq!(nf, v.sub(&word(&alg, &["e2", "e2*"])));
    assert_eq!(alg.format(&nf), "v - e2*e2^*");
    assert!(alg.nf(&word(&alg, &["e1*", "e2"])).is_zero());
    assert_eq!(alg.nf(&word(&alg, &["e1*", "e1"])), v);
    assert_eq!(alg.mul(&word(&alg, &["e1*"]), &word(&alg, &["e1"])), v);
    assert_eq!(alg.nf(&v), v);
    assert!(alg.nf(&AlgElem::zero()).is_zero());
    assert!(alg.check_relations().is_ok());
}

#[test]
fn matrix_algebra_examples() {
    let alg = Algebra::new(line(2));
    let (v1, v2) = (vertex(&alg, "v1"), vertex(&alg, "v2"));
    assert_eq!(alg.mul(&word(&alg, &["e1"]), &word(&alg, &["e1*"])), v1);
    assert_eq!(alg.mul(&word(&alg, &["e1*"]), &word(&alg, &["e1"])), v2);
    for n in 1..5 {
        assert_eq!(alg.basis_paths(n).len(), 4);
    }
    assert_eq!(alg.basis_paths(0).len(), 2);
    for n in 2..6 {
        let alg = Algebra::new(line(n));
        assert_eq!(alg.basis_paths(2 * n).len(), n * n, "M_{n}(K)");
        assert_eq!(alg.growth_count(2 * n) as usize, n * n);
    }
}

#[test]
fn mul_by_vertex_restricts_support() {
    let alg = Algebra::new(corpus().into_iter().find(|(n, _)| *n == "mixed_ck").unwrap().1);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let a = alg.nf(&random_elem(&alg, &mut rng, 5, 3));
        for v in 0..alg.graph().graph().vertex_count() {
            let expect: AlgElem = a.terms().filter(|(p, _)| p.source() == v).map(|(p, c)| (c.clone(), p.clone())).collect();
            assert_eq!(alg.mul(&alg.vertex(v), &a), expect);
        }
    }
}

#[test]
fn loop_counts() {
    let alg = Algebra::new(rose_leavitt(1));
    for n in 0..8 {
        assert_eq!(alg.basis_paths(n).len(), 2 * n + 1);
        assert_eq!(alg.growth_count(n), 2 * n as u128 + 1);
    }
}

#[test]
fn star_examples() {
    let alg = Algebra::new(rose_leavitt(2));
    let v = vertex(&alg, "v");
    assert_eq!(alg.star(&v), v);
    assert_eq!(word(&alg, &["e1", "e2*"]).star(), word(&alg, &["e2", "e1*"]));
    let e = word(&alg, &["e1"]);
    let a = e.scale(&q(2)).sub(&v.scale(&q(3)));
    assert_eq!(alg.star(&a), word(&alg, &["e1*"]).scale(&q(2)).sub(&v.scale(&q(3))));
}

#[test]
fn valuation_examples() {
    let alg = Algebra::new(rose_leavitt(2));
    assert_eq!(alg.valuation(&AlgElem::zero()), None);
    assert_eq!(alg.valuation(&vertex(&alg, "v")), Some(0));
    let h = Algebra::new(hmn(2, 2).base().clone());
    let x = word(&h, &["x_1_1"]);
    let xs = word(&h, &["x_1_1*"]);
    let prod = h.mul(&x, &xs);
    assert_eq!(h.valuation(&prod), Some(2));
    // With the first column block fixed, x_1_1 x_1_1* is forbidden and
    // rewrites to v − x_1_2 x_1_2*, which is normal.
    assert_eq!(prod, h.one().sub(&word(&h, &["x_1_2", "x_1_2*"])));
    let normal = h.mul(&word(&h, &["x_1_2"]), &word(&h, &["x_1_2*"]));
    assert_eq!(normal, word(&h, &["x_1_2", "x_1_2*"]));
}

#[test]
fn check_relations_examples() {
    assert!(Algebra::new(rose_leavitt(2)).check_relations().is_ok());
    assert!(Algebra::new(hmn(2, 3).base().clone()).check_relations().is_ok());
    assert!(Algebra::new(rose_cohn(3)).check_relations().is_ok());
    for (name, alg) in fixtures() {
        assert!(alg.check_relations().is_ok(), "{name}");
    }
}

#[test]
fn degree_examples() {
    let alg = Algebra::new(rose_leavitt(2));
    let comps = alg.degree_components(&vertex(&alg, "v"));
    assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![0]);
    let p = word(&alg, &["e1", "e2*"]);
    let comps = alg.degree_components(&p);
    assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![0]);
    assert_eq!(p.support().next().unwrap().len(), 2);
    let a = word(&alg, &["e1"]).sub(&word(&alg, &["e1*"]));
    assert_eq!(alg.degree_components(&a).keys().copied().collect::<Vec<_>>(), vec![-1, 1]);
}

#[test]
fn canonical_print() {
    let alg = Algebra::new(rose_leavitt(2));
    let a = word(&alg, &["e1", "e2*"])
        .scale(&Q::new(3.into(), 2.into()))
        .add(&vertex(&alg, "v"))
        .sub(&word(&alg, &["e1"]));
    assert_eq!(alg.format(&a), "v - e1 + 3/2*e1*e2^*");
    assert_eq!(alg.format(&AlgElem::zero()), "0");
    assert_eq!(alg.format(&vertex(&alg, "v").scale(&q(-1))), "-v");
}

#[test]
fn forbidden_table_is_total_on_common_blocks() {
    for (name, alg) in fixtures() {
        let g = alg.graph();
        let t = alg.table();
        for x in g.s_blocks() {
            for x2 in g.s_blocks() {
                assert_eq!(t.type1.get(&(x, x2)).copied(), first_common_col(g, x, x2), "{name}");
            }
        }
        for y in g.t_blocks() {
            for y2 in g.t_blocks() {
                assert_eq!(t.type2.get(&(y, y2)).copied(), first_common_row(g, y, y2), "{name}");
            }
        }
    }
}

#[test]
fn nf_agrees_with_naive_rewriter() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, alg) in fixtures() {
        for _ in 0..60 {
            let a = random_elem(&alg, &mut rng, 4, 5);
            assert_eq!(alg.nf(&a), oracle_nf(alg.graph(), &a), "{name}: {}", alg.format(&a));
        }
    }
}

#[test]
fn associativity_thousand_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, alg) in fixtures() {
        for _ in 0..1000 {
            let a = random_elem(&alg, &mut rng, 2, 2);
            let b = random_elem(&alg, &mut rng, 2, 2);
            let c = random_elem(&alg, &mut rng, 2, 2);
            let l = alg.mul(&alg.mul(&a, &b), &c);
            let r = alg.mul(&a, &alg.mul(&b, &c));
            assert_eq!(l, r, "{name}");
        }
    }
}

#[test]
fn real_paths_are_normal() {
    for (name, alg) in fixtures() {
        let gr = alg.graph().graph();
        let basis = alg.basis_paths(3);
        // every real path of length ≤ 3
        let mut frontier: Vec<GenPath> = (0..gr.edge_count()).map(|e| GenPath::letter(gr, Letter::Edge(e as u32))).collect();
        for _ in 0..3 {
            let mut next = Vec::new();
            for p in &frontier {
                assert!(basis.contains(p), "{name}");
                assert_eq!(alg.nf(&AlgElem::from_path(p.clone())), AlgElem::from_path(p.clone()));
                for e in gr.out_edges(p.range()) {
                    let mut w = p.letters().to_vec();
                    w.push(Letter::Edge(e as u32));
                    next.push(GenPath::word(gr, w).unwrap());
                }
            }
            frontier = next;
        }
    }
}

#[test]
fn basis_is_independent_of_enumeration_route() {
    for (name, alg) in fixtures() {
        for n in 0..5 {
            let b = alg.basis_paths(n);
            assert_eq!(b.len() as u128, alg.growth_count(n), "{name} n={n}");
            assert!(b.windows(2).all(|w| w[0] < w[1]), "{name}: sorted, distinct");
            assert!(b.iter().all(|p| alg.is_normal(p) && p.len() <= n));
        }
    }
}

#[test]
fn empty_separation_relations_vacuous() {
    let alg = Algebra::new(graph_core::catalog::cohn_edge());
    assert!(alg.check_relations().is_ok());
    assert!(alg.table().type1.is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nf_is_idempotent_and_normal(fix in 0usize..64, seed in any::<u64>()) {
        let (_, alg) = fixtures().swap_remove(fix % fixtures().len());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_elem(&alg, &mut rng, 5, 5);
        let n = alg.nf(&a);
        prop_assert_eq!(alg.nf(&n), n.clone());
        prop_assert!(n.support().all(|p| alg.is_normal(p)));
    }

    #[test]
    fn nf_is_linear_and_graded(fix in 0usize..64, seed in any::<u64>()) {
        let (_, alg) = fixtures().swap_remove(fix % fixtures().len());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_elem(&alg, &mut rng, 4, 4);
        let b = random_elem(&alg, &mut rng, 4, 4);
        let c = q(rng.gen_range(-4..=4));
        prop_assert_eq!(alg.nf(&a.add(&b.scale(&c))), alg.nf(&a).add(&alg.nf(&b).scale(&c)));
        let of_nf = alg.nf(&a).degree_components();
        let nf_of: BTreeMap<i64, AlgElem> = a
            .degree_components()
            .into_iter()
            .map(|(d, x)| (d, alg.nf(&x)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        prop_assert_eq!(of_nf, nf_of);
    }

    #[test]
    fn star_is_antimultiplicative_involution(fix in 0usize..64, seed in any::<u64>()) {
        let (_, alg) = fixtures().swap_remove(fix % fixtures().len());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_elem(&alg, &mut rng, 3, 3);
        let b = random_elem(&alg, &mut rng, 3, 3);
        prop_assert_eq!(alg.star(&alg.star(&a)), alg.nf(&a));
        prop_assert_eq!(alg.star(&alg.mul(&a, &b)), alg.mul(&alg.star(&b), &alg.star(&a)));
    }

    #[test]
    fn mul_distributes(fix in 0usize..64, seed in any::<u64>()) {
        let (_, alg) = fixtures().swap_remove(fix % fixtures().len());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_elem(&alg, &mut rng, 3, 3);
        let b = random_elem(&alg, &mut rng, 3, 3);
        let c = random_elem(&alg, &mut rng, 3, 3);
        prop_assert_eq!(alg.mul(&a, &b.add(&c)), alg.mul(&a, &b).add(&alg.mul(&a, &c)));
        prop_assert_eq!(alg.mul(&alg.one(), &a), alg.nf(&a));
        prop_assert_eq!(alg.mul(&a, &alg.one()), alg.nf(&a));
    }
}
