//! The verification suite: twenty numbered criteria, each run against
//! brute-force oracles or closed forms on generated instances.
//!
//! Every criterion draws its random instances from a ChaCha stream seeded
//! by `(seed, id)`, so results do not depend on which criteria run or in
//! what order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::complex::{
    chain_max_map, euler_mobius_report, verify_baclawski, verify_ideal_decomposition, MonotoneMap,
};
use crate::error::{Error, Result};
use crate::instances::{
    all_graphs, boolean_lattice, contraction_lattice, parse_partition_label, partition_lattice,
    random_connected_graph, random_poset, random_tree, subspace_lattice, Graph,
};
use crate::inversion::{
    derangements, derangements_series, down_sum, invert_down, invert_up, lindstrom_wilf_det, up_sum,
};
use crate::lattices::{
    basterfield_kelly_check, cutset_mobius, dowling_wilson_check, is_cutset, kung_check,
    modular_factorization, point_deletion, walker_complement_check, weisner_check, Lattice,
    RankedLattice,
};
use crate::matrix::int_to_json;
use crate::matroid::{
    chromatic_polynomial, codeword_weight_check, stirling_first_unsigned, whitney_nbc_report,
    AtomMatroid,
};
use crate::null_design::{
    boolean_bound, partition_claim, subspace_bound, support_lower_bound, upper_mobius_mass,
};
use crate::oracle;
use crate::poset::Poset;
use crate::report::Report;
use crate::tree::{
    distance_inverse_check, distance_matrix, graham_lovasz_check, graham_pollak_det,
    h_matrix_check, RootedTree,
};

/// `Full` runs the criteria at their stated sizes; `Small` shrinks counts
/// and instance sizes for a quick smoke run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

impl Scale {
    fn pick<T>(self, full: T, small: T) -> T {
        match self {
            Scale::Full => full,
            Scale::Small => small,
        }
    }
}

pub const CRITERIA: [&str; 20] = [
    "mobius inversion round trip, M Z = I",
    "boolean lattice mu(S,T) = (-1)^|T\\S|",
    "Hall chain sums equal mu",
    "derangements",
    "Lindstrom-Wilf determinant",
    "tree distance matrices",
    "Euler characteristic of order complex",
    "Baclawski monotone map identity",
    "Weisner's lemma",
    "cutset formula on atoms",
    "Walker complement theorem",
    "modular factorization",
    "Whitney NBC counts on partition lattices",
    "chromatic polynomial via contraction lattice",
    "full-weight codewords",
    "Dowling-Wilson determinant and partial sums",
    "Basterfield-Kelly W_1 vs W_{d-1}",
    "Kung rank condition",
    "point deletion recursion",
    "null design support bounds",
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub checks: u64,
    pub failures: Vec<Value>,
    pub details: Value,
}

impl CriterionResult {
    /// One line: id, PASS/FAIL, name and check count.
    pub fn line(&self) -> String {
        format!(
            "[{:>2}] {} {} ({} checks)",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.checks
        )
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("result serializes")
    }
}

const MAX_FAILURES: usize = 10;

#[derive(Default)]
struct Tally {
    checks: u64,
    failed: u64,
    failures: Vec<Value>,
    details: Map<String, Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn report(&mut self, context: &str, r: &Report) {
        self.check(
            r.pass,
            || json!({ "instance": context, "report": r.to_json() }),
        );
    }

    /// A library error counts as a failed check.
    fn result<T>(&mut self, context: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(
                    false,
                    || json!({ "instance": context, "error": e.to_string() }),
                );
                None
            }
        }
    }

    fn note(&mut self, key: &str, v: Value) {
        self.details.insert(key.to_string(), v);
    }

    fn finish(self, id: usize) -> CriterionResult {
        CriterionResult {
            id,
            name: CRITERIA[id - 1],
            pass: self.failed == 0 && self.checks > 0,
            checks: self.checks,
            failures: self.failures,
            details: Value::Object(self.details),
        }
    }
}

fn rng_for(seed: u64, id: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ ((id as u64) << 40) ^ 0x5eed_0000)
}

fn ints(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<BigInt> {
    (0..n)
        .map(|_| BigInt::from(rng.gen_range(lo..=hi)))
        .collect()
}

fn ranked(l: Lattice) -> Result<RankedLattice> {
    l.ranked()
}

/// Named lattice instances used by several criteria.
fn boolean(n: usize) -> (String, Result<RankedLattice>) {
    (format!("B({n})"), boolean_lattice(n).and_then(ranked))
}

fn subspaces(q: usize, n: usize) -> (String, Result<RankedLattice>) {
    (
        format!("B_{q}({n})"),
        subspace_lattice(q, n).and_then(ranked),
    )
}

fn partitions(n: usize) -> (String, Result<RankedLattice>) {
    (format!("P({n})"), partition_lattice(n).and_then(ranked))
}

fn graphic(name: &str, g: &Graph) -> (String, Result<RankedLattice>) {
    (
        format!("L({name})"),
        contraction_lattice(g).and_then(ranked),
    )
}

fn non_complete_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("K4-e", Graph::complete_minus_edge(4)),
        ("K2,3", Graph::complete_bipartite(2, 3)),
    ]
}

const SUBSPACE_CASES: [(usize, usize); 5] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)];

fn c1(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 1);
    for k in 0..scale.pick(500, 60) {
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.7);
        let p = random_poset(n, density, rng.gen());
        let ctx = format!("poset #{k} (|P| = {n})");
        let (Some(m), Some(z)) = (
            t.result(&ctx, p.mobius_matrix()),
            t.result(&ctx, p.zeta_matrix()),
        ) else {
            continue;
        };
        t.check(
            m.mul(&z).is_identity() && z.mul(&m).is_identity(),
            || json!({ "instance": ctx, "fails": "M Z = Z M = I" }),
        );
        t.check(
            m == oracle::mobius_by_inverse(&p),
            || json!({ "instance": ctx, "fails": "M equals Gauss-Jordan inverse of Z" }),
        );
        let g = ints(&mut rng, n, -9, 9);
        let rounds = (|| -> Result<bool> {
            Ok(up_sum(&p, &invert_up(&p, &g)?)? == g
                && invert_up(&p, &up_sum(&p, &g)?)? == g
                && down_sum(&p, &invert_down(&p, &g)?)? == g
                && invert_down(&p, &down_sum(&p, &g)?)? == g)
        })();
        if let Some(ok) = t.result(&ctx, rounds) {
            t.check(
                ok,
                || json!({ "instance": ctx, "fails": "inversion round trip" }),
            );
        }
    }
    t
}

fn c2(scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    for n in 0..=scale.pick(8, 5) {
        let ctx = format!("B({n})");
        let Some(l) = t.result(&ctx, boolean_lattice(n)) else {
            continue;
        };
        let mut bad = 0u64;
        for i in 0..l.len() {
            for j in 0..l.len() {
                let expect = match oracle::subset_difference(l.label(i), l.label(j)) {
                    Some(d) if d % 2 == 0 => BigInt::one(),
                    Some(_) => -BigInt::one(),
                    None => BigInt::zero(),
                };
                if l.mu(i, j) != expect {
                    bad += 1;
                }
            }
        }
        t.check(
            bad == 0,
            || json!({ "instance": ctx, "mismatched_pairs": bad }),
        );
    }
    t
}

fn c3(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 3);
    let mut pairs = 0u64;
    for k in 0..scale.pick(200, 30) {
        let n = rng.gen_range(1..=10);
        let p = random_poset(n, rng.gen_range(0.1..0.8), rng.gen());
        for a in 0..n {
            for b in (0..n).filter(|&b| p.leq(a, b)) {
                pairs += 1;
                let ctx = format!("poset #{k}, pair ({a},{b})");
                let Some(by_chains) = t.result(&ctx, p.mobius_by_chains(a, b)) else {
                    continue;
                };
                let Some(counts) = t.result(&ctx, p.chain_counts(a, b)) else {
                    continue;
                };
                let counts_ok = (0..=n).all(|m| {
                    let lib = counts.get(m).cloned().unwrap_or_default();
                    lib == BigInt::from(oracle::chains_of_length(&p, a, b, m))
                });
                let mu = p.mu(a, b);
                let hall = oracle::hall_sum(&p, a, b);
                t.check(by_chains == mu && hall == mu && counts_ok, || {
                    json!({
                        "instance": ctx,
                        "mu": int_to_json(&mu),
                        "chain_sum": int_to_json(&by_chains),
                        "subset_enumeration": int_to_json(&hall),
                        "chain_counts_agree": counts_ok,
                    })
                });
            }
        }
    }
    t.note("comparable_pairs", json!(pairs));
    t
}

fn c4(_scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut table = Vec::new();
    for n in 0..=12 {
        let ctx = format!("D_{n}");
        let Some(by_inversion) = t.result(&ctx, derangements(n)) else {
            continue;
        };
        let series = derangements_series(n);
        t.check(by_inversion == series, || {
            json!({ "instance": ctx, "inversion": int_to_json(&by_inversion), "series": int_to_json(&series) })
        });
        if n <= 7 {
            let brute = BigInt::from(oracle::derangements_brute(n));
            t.check(by_inversion == brute, || {
                json!({ "instance": ctx, "inversion": int_to_json(&by_inversion), "brute_force": int_to_json(&brute) })
            });
        }
        table.push(int_to_json(&by_inversion));
    }
    t.note("D", Value::Array(table));
    t
}

fn c5(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 5);
    for k in 0..scale.pick(100, 20) {
        let n = rng.gen_range(1..=8);
        let p = random_poset(n, rng.gen_range(0.1..0.8), rng.gen());
        let f = ints(&mut rng, n, -5, 5);
        let ctx = format!("pair #{k} (|P| = {n})");
        let Some((g, det)) = t.result(&ctx, lindstrom_wilf_det(&p, &f)) else {
            continue;
        };
        let prod: BigInt = f.iter().product();
        let leibniz = oracle::det_leibniz(&g);
        t.check(det == prod && leibniz == prod, || {
            json!({
                "instance": ctx,
                "det": int_to_json(&det),
                "leibniz": int_to_json(&leibniz),
                "product": int_to_json(&prod),
            })
        });
    }
    t
}

fn c6(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 6);
    let max_n = scale.pick(12, 8);
    for n in 2..=max_n {
        if let Some(r) = t.result(&format!("H({n})"), h_matrix_check(n)) {
            t.report(&format!("H({n})"), &r);
        }
    }
    for k in 0..scale.pick(100, 20) {
        let n = 2 + k % (max_n - 1);
        let g = random_tree(n, rng.gen());
        let dist = oracle::graph_distances(&g);
        for root in 0..n {
            let ctx = format!("tree #{k} (n = {n}), root {root}");
            let Some(tree) = t.result(&ctx, RootedTree::from_graph(&g, root)) else {
                continue;
            };
            t.report(&ctx, &graham_lovasz_check(&tree));
            if root > 0 {
                continue;
            }
            let d = distance_matrix(&tree);
            let bfs_ok = (0..n)
                .all(|u| (0..n).all(|v| Some(d.get(u, v).clone()) == dist[u][v].map(BigInt::from)));
            t.check(
                bfs_ok,
                || json!({ "instance": ctx, "fails": "distances differ from BFS" }),
            );
            if let Some((det, closed)) = t.result(&ctx, graham_pollak_det(&tree)) {
                t.check(det == closed, || {
                    json!({ "instance": ctx, "det": int_to_json(&det), "closed_form": int_to_json(&closed) })
                });
            }
            if let Some(r) = t.result(&ctx, distance_inverse_check(&tree)) {
                t.report(&ctx, &r);
            }
        }
    }
    t
}

fn c7(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 7);
    for k in 0..scale.pick(500, 60) {
        let n = rng.gen_range(0..=10);
        let p = random_poset(n, rng.gen_range(0.1..0.8), rng.gen());
        let ctx = format!("poset #{k} (|P| = {n})");
        if let Some(r) = t.result(&ctx, euler_mobius_report(&p)) {
            t.report(&ctx, &r);
        }
        let lib = p.mobius_number();
        let brute = oracle::mobius_number_by_chains(&p);
        t.check(lib == brute, || {
            json!({ "instance": ctx, "mu": int_to_json(&lib), "chain_enumeration": int_to_json(&brute) })
        });
    }
    t
}

/// A random order-preserving map `P → Q`, choosing each image among the
/// common upper bounds of the images of its lower covers. When that set is
/// empty the target gets bounds adjoined, which always succeeds.
fn random_monotone(p: &Poset, q: Poset, rng: &mut ChaCha8Rng) -> (Poset, Vec<usize>) {
    let attempt = |q: &Poset, rng: &mut ChaCha8Rng| -> Option<Vec<usize>> {
        let mut f = vec![0usize; p.len()];
        for x in 0..p.len() {
            let cands: Vec<usize> = (0..q.len())
                .filter(|&y| p.lower_covers(x).iter().all(|&z| q.leq(f[z], y)))
                .collect();
            f[x] = *cands.choose(rng)?;
        }
        Some(f)
    };
    if let Some(f) = attempt(&q, rng) {
        return (q, f);
    }
    let q = q.adjoin_bounds();
    let f = attempt(&q, rng).expect("a top always exists");
    (q, f)
}

fn c8(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 8);
    for k in 0..scale.pick(200, 30) {
        let p = random_poset(rng.gen_range(1..=7), rng.gen_range(0.1..0.8), rng.gen());
        let q = random_poset(rng.gen_range(1..=7), rng.gen_range(0.1..0.8), rng.gen());
        let (q, f) = random_monotone(&p, q, &mut rng);
        let ctx = format!("map #{k} (|P| = {}, |Q| = {})", p.len(), q.len());
        t.check(
            q.mobius_number() == oracle::mobius_number_by_chains(&q),
            || json!({ "instance": ctx, "fails": "mu(Q) differs from chain enumeration" }),
        );
        let Some(map) = t.result(&ctx, MonotoneMap::new(p.clone(), q, f)) else {
            continue;
        };
        t.report(&ctx, &verify_baclawski(&map));

        let picked: Vec<usize> = (0..p.len()).filter(|_| rng.gen_bool(0.4)).collect();
        let ideal: Vec<usize> = (0..p.len())
            .filter(|&x| picked.iter().any(|&y| p.leq(x, y)))
            .collect();
        if let Some(r) = t.result(&ctx, verify_ideal_decomposition(&p, &ideal)) {
            t.report(&format!("{ctx}, ideal of size {}", ideal.len()), &r);
        }
        if p.len() <= 5 {
            if let Some(m) = t.result(&ctx, chain_max_map(&p)) {
                t.report(&format!("{ctx}, chain maximum map"), &verify_baclawski(&m));
            }
        }
    }
    t
}

fn c9(scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut cases: Vec<(String, Result<RankedLattice>)> = Vec::new();
    cases.extend((1..=scale.pick(5, 4)).map(boolean));
    cases.extend((1..=3).map(|n| subspaces(2, n)));
    cases.extend((1..=scale.pick(5, 4)).map(partitions));
    for (name, l) in cases {
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        for a in (0..l.len()).filter(|&a| a != l.zero()) {
            let ctx = format!("{name}, a = {}", l.label(a));
            if let Some(r) = t.result(&ctx, weisner_check(&l, a)) {
                t.report(&ctx, &r);
            }
        }
    }
    t
}

fn c10(_scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut cases: Vec<(String, Result<RankedLattice>)> = (1..=4).map(boolean).collect();
    cases.push(subspaces(2, 3));
    for (name, l) in cases {
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        let atoms = l.atoms();
        t.check(
            is_cutset(&l, &atoms).is_none(),
            || json!({ "instance": name, "fails": "atoms are not a cutset" }),
        );
        let Some((sum, a)) = t.result(&name, cutset_mobius(&l, &atoms)) else {
            continue;
        };
        let mu = l.mu01();
        t.check(sum == mu, || {
            json!({ "instance": name, "sum": int_to_json(&sum), "mu01": int_to_json(&mu), "a_k": a })
        });
        if name == "B_2(3)" {
            t.check(
                sum == BigInt::from(-8),
                || json!({ "instance": name, "expected": -8, "got": int_to_json(&sum) }),
            );
            t.note("B_2(3)", json!({ "sum": int_to_json(&sum), "a_k": a }));
        }
    }
    t
}

fn c11(_scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    for (name, l) in [boolean(4), subspaces(2, 3), partitions(4)] {
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        for a in l.proper_part() {
            let ctx = format!("{name}, a = {}", l.label(a));
            if let Some(r) = t.result(&ctx, walker_complement_check(&l, a)) {
                t.report(&ctx, &r);
            }
        }
    }
    t
}

fn c12(scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut table = Vec::new();
    for (q, n) in SUBSPACE_CASES {
        let (name, l) = subspaces(q, n);
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        let a = l.coatoms()[0];
        if let Some(r) = t.result(&name, modular_factorization(&l, a)) {
            t.report(&name, &r);
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expect = BigInt::from(sign) * BigInt::from(q).pow((n * (n - 1) / 2) as u32);
        let mu = l.mu01();
        t.check(mu == expect, || json!({ "instance": name, "mu01": int_to_json(&mu), "expected": int_to_json(&expect) }));
        table.push(json!([name, int_to_json(&mu)]));
    }
    for n in 1..=scale.pick(7, 5) {
        let (name, l) = partitions(n);
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        if n >= 3 {
            let hyper: String =
                (1..n).map(|i| i.to_string()).collect::<String>() + "|" + &n.to_string();
            let Some(a) = t.result(&name, l.index_of(&hyper)) else {
                continue;
            };
            if let Some(r) = t.result(&name, modular_factorization(&l, a)) {
                t.report(&format!("{name}, a = {hyper}"), &r);
            }
        }
        let fact: BigInt = (1..n).map(BigInt::from).product();
        let expect = if (n - 1) % 2 == 0 { fact } else { -fact };
        let mu = l.mu01();
        t.check(mu == expect, || json!({ "instance": name, "mu01": int_to_json(&mu), "expected": int_to_json(&expect) }));
        table.push(json!([name, int_to_json(&mu)]));
    }
    t.note("mu01", Value::Array(table));
    t
}

fn c13(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 13);
    for n in 1..=scale.pick(7, 5) {
        let (name, l) = partitions(n);
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        let Some(m) = t.result(&name, AtomMatroid::new(&l)) else {
            continue;
        };
        let cycles = oracle::permutations_by_cycles(n);
        let expect: Vec<u64> = (0..n).map(|k| cycles[n - k]).collect();
        let stirling_ok =
            (0..n).all(|k| stirling_first_unsigned(n, n - k).ok() == Some(BigInt::from(expect[k])));
        t.check(
            stirling_ok,
            || json!({ "instance": name, "fails": "Stirling numbers differ from cycle counts" }),
        );
        let mut orders = vec![(0..m.len()).collect::<Vec<usize>>()];
        for _ in 0..5 {
            let mut o = orders[0].clone();
            o.shuffle(&mut rng);
            orders.push(o);
        }
        for (i, order) in orders.iter().enumerate() {
            let ctx = format!("{name}, order #{i}");
            if let Some(counts) = t.result(&ctx, m.nbc_counts(order)) {
                t.check(
                    counts == expect,
                    || json!({ "instance": ctx, "nbc": counts, "expected": expect }),
                );
            }
            if i == 0 {
                if let Some(r) = t.result(&ctx, whitney_nbc_report(&l, order)) {
                    t.report(&ctx, &r);
                }
            }
        }
    }
    t
}

fn chromatic_case(t: &mut Tally, ctx: &str, g: &Graph) {
    let Some(poly) = t.result(ctx, chromatic_polynomial(g)) else {
        return;
    };
    let dc = oracle::chromatic_deletion_contraction(g);
    t.check(poly == dc, || {
        json!({ "instance": ctx, "lattice": poly.to_string(), "deletion_contraction": dc.to_string() })
    });
    for k in 0..=3usize {
        let v = poly.eval(&BigInt::from(k));
        let brute = BigInt::from(oracle::proper_colorings(g, k));
        t.check(v == brute, || {
            json!({ "instance": ctx, "k": k, "polynomial": int_to_json(&v), "colourings": int_to_json(&brute) })
        });
    }
}

fn c14(scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 14);
    let mut graphs = 0;
    for n in 1..=scale.pick(5, 4) {
        let Some(all) = t.result(&format!("graphs on {n} vertices"), all_graphs(n)) else {
            continue;
        };
        for g in all.into_iter().filter(Graph::is_connected) {
            graphs += 1;
            chromatic_case(&mut t, &format!("{:?}", (n, g.edges())), &g);
        }
    }
    for k in 0..scale.pick(50, 10) {
        let g = random_connected_graph(6, rng.gen_range(0.1..0.6), rng.gen());
        chromatic_case(
            &mut t,
            &format!("random 6-vertex graph #{k} {:?}", g.edges()),
            &g,
        );
    }
    t.note("connected_small_graphs", json!(graphs));
    t
}

fn random_generator(q: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u8>> {
    let m = rng.gen_range(2..=4);
    let n = rng.gen_range(2..=6);
    let mut cols: Vec<Vec<u8>> = Vec::new();
    while cols.len() < n {
        let c: Vec<u8> = (0..m).map(|_| rng.gen_range(0..q) as u8).collect();
        if c.iter().any(|&x| x != 0) {
            cols.push(c);
        }
    }
    (0..m)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

fn c15(_scale: Scale, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, 15);
    for k in 0..20 {
        let q = if k % 2 == 0 { 2 } else { 3 };
        let g = random_generator(q, &mut rng);
        let ctx = format!("GF({q}) generator #{k} {g:?}");
        if let Some(r) = t.result(&ctx, codeword_weight_check(q, &g, 1)) {
            t.report(&ctx, &r);
        }
        if k < 5 {
            if let Some(r) = t.result(&ctx, codeword_weight_check(q, &g, 2)) {
                t.report(&format!("{ctx}, t = 2"), &r);
            }
        }
    }
    t
}

fn c16(scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut cases: Vec<(String, Result<RankedLattice>)> =
        (1..=scale.pick(5, 4)).map(boolean).collect();
    cases.push(subspaces(2, 3));
    cases.push(partitions(scale.pick(5, 4)));
    for (name, l) in cases {
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        if let Some(r) = t.result(&name, dowling_wilson_check(&l)) {
            t.report(&name, &r);
        }
    }
    t
}

fn c17(scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut modular: Vec<(String, Result<RankedLattice>)> = (1..=5).map(boolean).collect();
    modular.extend(SUBSPACE_CASES.iter().map(|&(q, n)| subspaces(q, n)));
    let mut other: Vec<(String, Result<RankedLattice>)> =
        (4..=scale.pick(6, 5)).map(partitions).collect();
    other.extend(
        non_complete_graphs()
            .iter()
            .map(|(name, g)| graphic(name, g)),
    );
    let mut rows = Vec::new();
    for (expect_modular, cases) in [(true, modular), (false, other)] {
        for (name, l) in cases {
            let Some(l) = t.result(&name, l) else {
                continue;
            };
            let w = l.whitney_numbers();
            let d = l.height();
            let (w1, wd1) = (w[1.min(d)], w[d.saturating_sub(1)]);
            let is_mod = l.is_modular_lattice();
            let ok = if expect_modular {
                w1 == wd1 && is_mod
            } else {
                w1 < wd1 && !is_mod
            };
            t.check(
                ok,
                || json!({ "instance": name, "W1": w1, "Wd-1": wd1, "modular": is_mod }),
            );
            if let Some(r) = t.result(&name, basterfield_kelly_check(&l)) {
                t.report(&name, &r);
            }
            rows.push(json!([name, w1, wd1, is_mod]));
        }
    }
    t.note("W1_Wd1_modular", Value::Array(rows));
    t
}

fn c18(scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut cases: Vec<(String, Result<RankedLattice>)> = (1..=5).map(boolean).collect();
    cases.extend(SUBSPACE_CASES.iter().map(|&(q, n)| subspaces(q, n)));
    cases.extend((2..=scale.pick(6, 5)).map(partitions));
    cases.extend(
        non_complete_graphs()
            .iter()
            .map(|(name, g)| graphic(name, g)),
    );
    cases.push(graphic("K4", &Graph::complete(4)));
    for (name, l) in cases {
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        t.check(
            l.is_geometric(),
            || json!({ "instance": name, "fails": "not geometric" }),
        );
        if let Some(r) = t.result(&name, kung_check(&l, 1)) {
            t.report(&name, &r);
        }
        if l.is_modular_lattice() {
            let (j, m) = (l.join_irreducibles().len(), l.meet_irreducibles().len());
            t.check(j == m, || json!({ "instance": name, "J": j, "M": m }));
        }
    }
    t
}

fn c19(_scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    let k4 = Graph::complete(4);
    for (name, l) in [boolean(4), subspaces(2, 3), graphic("K4", &k4)] {
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        for p in l.atoms() {
            let ctx = format!("{name}, p = {}", l.label(p));
            let Some((lp, r)) = t.result(&ctx, point_deletion(&l, p)) else {
                continue;
            };
            t.report(&ctx, &r);
            if name == "L(K4)" {
                // the atom merging u and v; deleting it is the lattice of K4 − uv
                let blocks = parse_partition_label(l.label(p), 4, 0).expect("contraction label");
                let e = k4
                    .edges()
                    .iter()
                    .position(|&(u, v)| blocks[u] == blocks[v])
                    .expect("atom merges an edge");
                let Some(expect) = t.result(&ctx, contraction_lattice(&k4.without_edge(e))) else {
                    continue;
                };
                t.check(lp.is_isomorphic(&expect), || {
                    json!({ "instance": ctx, "fails": "L \\ p is not the lattice of K4 minus the edge" })
                });
            }
        }
    }
    t
}

fn c20(scale: Scale, _seed: u64) -> Tally {
    let mut t = Tally::default();
    for n in 1..=scale.pick(8, 5) {
        let name = format!("B({n})");
        let Some(l) = t.result(&name, boolean_lattice(n)) else {
            continue;
        };
        let heights = l.heights();
        for b in (0..l.len()).filter(|&b| b != l.zero()) {
            let sum = support_lower_bound(&l, b);
            let subsets = (0..l.len())
                .filter(|&c| oracle::subset_difference(l.label(c), l.label(b)).is_some())
                .count();
            let closed = boolean_bound(heights[b] as u32 - 1);
            t.check(sum == closed && sum == BigInt::from(subsets), || {
                json!({ "instance": name, "b": l.label(b), "sum": int_to_json(&sum), "closed_form": int_to_json(&closed) })
            });
        }
    }
    let bq: Vec<(usize, usize)> = vec![(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)];
    for (q, n) in bq {
        let (name, l) = subspaces(q, n);
        let Some(l) = t.result(&name, l) else {
            continue;
        };
        for b in (0..l.len()).filter(|&b| b != l.zero()) {
            let sum = support_lower_bound(&l, b);
            let closed = subspace_bound(q as u32, l.rank(b) as u32 - 1);
            t.check(sum == closed, || {
                json!({ "instance": name, "b": l.label(b), "sum": int_to_json(&sum), "closed_form": int_to_json(&closed) })
            });
        }
    }

    // P(n): both sums against the block-count oracle; the claim is recorded,
    // not assumed.
    let mut first_counterexample = Value::Null;
    let mut claim_failures = 0u64;
    let mut upper_failures = 0u64;
    let mut rows = 0u64;
    for n in 1..=scale.pick(7, 5) {
        let name = format!("P({n})");
        let Some(l) = t.result(&name, partition_lattice(n)) else {
            continue;
        };
        let blocks: Vec<Vec<usize>> = (0..l.len())
            .map(|x| parse_partition_label(l.label(x), n, 1).expect("partition label"))
            .collect();
        for b in 0..l.len() {
            rows += 1;
            let k = n - l.label(b).split('|').count();
            let claim = partition_claim(n, k);
            let lower = support_lower_bound(&l, b);
            let upper = upper_mobius_mass(&l, b);
            let mut oracle_lower = BigInt::zero();
            let mut oracle_upper = BigInt::zero();
            for c in 0..l.len() {
                if let Some(m) = oracle::partition_mu(&blocks[c], &blocks[b]) {
                    oracle_lower += m.abs();
                }
                if let Some(m) = oracle::partition_mu(&blocks[b], &blocks[c]) {
                    oracle_upper += m.abs();
                }
            }
            t.check(lower == oracle_lower && upper == oracle_upper, || {
                json!({
                    "instance": name,
                    "b": l.label(b),
                    "lower": int_to_json(&lower),
                    "oracle_lower": int_to_json(&oracle_lower),
                    "upper": int_to_json(&upper),
                    "oracle_upper": int_to_json(&oracle_upper),
                })
            });
            if lower != claim {
                claim_failures += 1;
                if first_counterexample.is_null() {
                    first_counterexample = json!({
                        "n": n,
                        "b": l.label(b),
                        "k": k,
                        "sum_below_b": int_to_json(&lower),
                        "claimed": int_to_json(&claim),
                    });
                }
            }
            if upper != claim {
                upper_failures += 1;
            }
        }
    }
    t.note(
        "partition_claim",
        json!({
            "elements_checked": rows,
            "claim_holds": claim_failures == 0,
            "elements_where_claim_fails": claim_failures,
            "first_counterexample": first_counterexample,
            "upper_sum_equals_factorial_everywhere": upper_failures == 0,
        }),
    );
    t.note(
        "finding",
        json!(if claim_failures == 0 {
            "sum_{c<=b} |mu(c,b)| = (n-k)! confirmed on P(n)"
        } else {
            "sum_{c<=b} |mu(c,b)| = (n-k)! is false on P(n); the brute-force sums are reported instead"
        }),
    );
    t
}

type Runner = fn(Scale, u64) -> Tally;

const RUNNERS: [Runner; 20] = [
    c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15, c16, c17, c18, c19, c20,
];

/// Runs criterion `id` (1 to 20).
pub fn run_criterion(id: usize, scale: Scale, seed: u64) -> Result<CriterionResult> {
    if !(1..=RUNNERS.len()).contains(&id) {
        return Err(Error::OutOfRange("criterion id (1 to 20)"));
    }
    Ok(RUNNERS[id - 1](scale, seed).finish(id))
}

/// Runs every criterion in parallel; results come back in id order.
pub fn run_all(scale: Scale, seed: u64) -> Vec<CriterionResult> {
    (1..=RUNNERS.len())
        .into_par_iter()
        .map(|id| RUNNERS[id - 1](scale, seed).finish(id))
        .collect()
}
