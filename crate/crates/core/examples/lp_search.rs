//! Exact LP search for weights on even derangement classes at small n,
//! where no closed form is used.

use setwise_ekr::lp::{feasibility_search, SearchOutcome};

fn main() {
    for (n, k) in [(7, 3), (10, 4), (12, 5)] {
        let report = feasibility_search(n, k, true).unwrap();
        print!("n = {n}, k = {k}: {} columns, {} pivots: ", report.columns, report.pivots);
        match &report.outcome {
            SearchOutcome::Feasible { scheme } => {
                println!("feasible on {} classes", scheme.support().count());
                for e in scheme.support() {
                    println!("  {:<16} {}", e.class.to_string(), e.weight);
                }
            }
            SearchOutcome::Infeasible => println!("infeasible"),
            SearchOutcome::Undecided { reason } => println!("undecided ({reason})"),
        }
    }
}
