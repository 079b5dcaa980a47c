//! `lattice-check`: structural properties, then every identity whose
//! hypotheses hold. Identities that do not apply are listed as skipped.

use mobiuslab::lattices::{
    basterfield_kelly_check, dowling_wilson_check, kung_check, modular_factorization,
    point_deletion, walker_complement_check, weisner_check, Lattice,
};
use mobiuslab::matrix::int_to_json;
use mobiuslab::{Report, Result};
use serde_json::{json, Value};

use crate::{Outcome, Run};

fn record(checks: &mut Vec<Value>, failed: &mut usize, name: &str, r: Result<Report>) {
    match r {
        Ok(r) => {
            if !r.pass {
                *failed += 1;
            }
            checks.push(json!({ "check": name, "pass": r.pass, "report": r.to_json() }));
        }
        Err(e) => checks.push(json!({ "check": name, "skipped": e.to_string() })),
    }
}

pub fn run(l: &Lattice) -> Run {
    let mut checks = Vec::new();
    let mut failed = 0;
    let mut props = json!({
        "elements": l.len(),
        "mu01": int_to_json(&l.mu01()),
        "atoms": l.atoms().len(),
        "complemented": l.is_complemented(),
        "atomistic": l.is_atomistic(),
        "modular": l.is_modular_lattice(),
    });

    for a in (0..l.len()).filter(|&a| a != l.zero()) {
        record(
            &mut checks,
            &mut failed,
            &format!("weisner {}", l.label(a)),
            weisner_check(l, a),
        );
    }
    for a in l.proper_part() {
        record(
            &mut checks,
            &mut failed,
            &format!("walker {}", l.label(a)),
            walker_complement_check(l, a),
        );
    }
    for p in l.atoms() {
        let r = point_deletion(l, p).map(|(_, r)| r);
        record(
            &mut checks,
            &mut failed,
            &format!("deletion {}", l.label(p)),
            r,
        );
    }

    if let Ok(r) = l.clone().ranked() {
        let geometric = r.is_geometric();
        props["ranked"] = json!(true);
        props["height"] = json!(r.height());
        props["whitney_numbers"] = json!(r.whitney_numbers());
        props["semimodular"] = json!(r.is_semimodular());
        props["geometric"] = json!(geometric);
        for a in l
            .proper_part()
            .into_iter()
            .filter(|&a| r.is_modular_element(a))
        {
            record(
                &mut checks,
                &mut failed,
                &format!("modular factorization {}", l.label(a)),
                modular_factorization(&r, a),
            );
        }
        if geometric {
            record(
                &mut checks,
                &mut failed,
                "dowling-wilson",
                dowling_wilson_check(&r),
            );
            record(
                &mut checks,
                &mut failed,
                "basterfield-kelly",
                basterfield_kelly_check(&r),
            );
            record(&mut checks, &mut failed, "kung k=1", kung_check(&r, 1));
        }
    } else {
        props["ranked"] = json!(false);
    }

    let run = checks.iter().filter(|c| c.get("pass").is_some()).count();
    let pass = failed == 0;
    Ok(Outcome::json(
        json!({ "properties": props, "checks": checks, "pass": pass }),
        pass,
        format!("{} of {run} identity checks hold", run - failed),
    ))
}
