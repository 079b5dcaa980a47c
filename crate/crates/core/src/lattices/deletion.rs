//! Deleting a point from a point lattice.

use num_bigint::BigInt;
use serde_json::json;

use super::Lattice;
use crate::error::{Error, Result};
use crate::report::Report;

/// Deletes the atom `p` and checks the resulting recursion for `μ(0, 1)`.
///
/// `f(a)` is the join of the atoms other than `p` below `a`; its fixed
/// points form a join-semilattice with zero, completed to the lattice
/// `L∖p`. When the other atoms join to `h < 1` the point is a co-loop and
/// `μ_L(0,1) = −μ_L(p,1)`; otherwise `μ_L(0,1) = μ_{L∖p}(0,1) − μ_L(p,1)`.
/// The report also confirms `μ(M') = μ(L' ∖ p)`, where `M'` is the fixed-point
/// set without `0` and `1_L`.
pub fn point_deletion(l: &Lattice, p: usize) -> Result<(Lattice, Report)> {
    let atoms = l.atoms();
    if !atoms.contains(&p) {
        return Err(Error::Precondition(format!(
            "`{}` is not an atom",
            l.label(p)
        )));
    }
    let (zero, one) = (l.zero(), l.one());
    let others: Vec<usize> = atoms.iter().copied().filter(|&q| q != p).collect();
    let f = |a: usize| l.join_all(others.iter().copied().filter(|&q| l.leq(q, a)));
    let fixed: Vec<usize> = (0..l.len()).filter(|&a| f(a) == a).collect();
    let h = f(one);
    let coloop = h != one;

    let deleted = Lattice::from_join_semilattice(l.induced(&fixed))?;
    let mu_p1 = l.mu(p, one);
    let rhs = if coloop {
        -mu_p1.clone()
    } else {
        deleted.mu01() - &mu_p1
    };
    let mut report = Report::equal(
        if coloop {
            "mu_L(0,1) = -mu_L(p,1)  (co-loop)"
        } else {
            "mu_L(0,1) = mu_{L\\p}(0,1) - mu_L(p,1)"
        },
        &l.mu01(),
        &rhs,
    )
    .with_witness(json!({
        "point": l.label(p),
        "coloop": coloop,
        "deleted_size": deleted.len(),
    }));

    let m_prime: Vec<usize> = fixed
        .iter()
        .copied()
        .filter(|&a| a != zero && a != one)
        .collect();
    let l_minus_p: Vec<usize> = l.proper_part().into_iter().filter(|&a| a != p).collect();
    let mu_m: BigInt = l.induced(&m_prime).mobius_number();
    let mu_lp: BigInt = l.induced(&l_minus_p).mobius_number();
    if mu_m != mu_lp {
        report = report.fail(json!({
            "retract_mismatch": [mu_m.to_string(), mu_lp.to_string()],
        }));
    }
    Ok((deleted, report))
}
