/// A matching saturating every left vertex `0..left` into `0..right`, with
/// edge `p — q` whenever `edge(p, q)`. Returns `φ` with `edge(p, φ(p))`,
/// `φ` injective.
///
/// Augmenting paths (Kuhn's algorithm), adequate at these sizes.
pub fn left_saturating_matching(
    left: usize,
    right: usize,
    edge: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..left)
        .map(|p| (0..right).filter(|&q| edge(p, q)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right];

    fn augment(
        p: usize,
        adj: &[Vec<usize>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &q in &adj[p] {
            if seen[q] {
                continue;
            }
            seen[q] = true;
            if owner[q].is_none_or(|o| augment(o, adj, owner, seen)) {
                owner[q] = Some(p);
                return true;
            }
        }
        false
    }

    for p in 0..left {
        let mut seen = vec![false; right];
        if !augment(p, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut phi = vec![0usize; left];
    for (q, o) in owner.iter().enumerate() {
        if let Some(p) = o {
            phi[*p] = q;
        }
    }
    Some(phi)
}

/// A permutation `σ` of `0..n` with `edge(p, σ(p))` for every `p`.
pub fn perfect_matching(n: usize, edge: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    left_saturating_matching(n, n, edge)
}
