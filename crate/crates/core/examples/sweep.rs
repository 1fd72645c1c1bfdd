//! Certify a range of n for each k and report the weight source.

use setwise_ekr::certify::{certify, Provenance};

fn main() {
    for (k, from, to) in [(3, 7, 30), (4, 9, 34), (5, 11, 36)] {
        for n in from..=to {
            let line = match certify(n, k) {
                Ok(c) => {
                    let source = match c.provenance {
                        Provenance::ClosedForm { family } => family.to_string(),
                        Provenance::LpSearch { .. } => "search".to_string(),
                    };
                    format!("{:?} via {source}, max {} x{}", c.status, c.max_eigenvalue, c.multiplicity)
                }
                Err(e) => e.to_string(),
            };
            println!("k = {k}, n = {n:>2}: {line}");
        }
    }
}
