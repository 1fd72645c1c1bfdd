//! Maximum cocliques of small derangement graphs by exhaustive search.

use setwise_ekr::brute::{brute_report, Group, DEFAULT_CAP};

fn main() {
    let cases = [(Group::Sym, 4, 1), (Group::Sym, 5, 2), (Group::Alt, 4, 2), (Group::Sym, 6, 3)];
    for (group, n, k) in cases {
        let r = brute_report(group, n, k, DEFAULT_CAP, true).unwrap();
        println!(
            "{group}({n}) on {k}-subsets: alpha = {}, density {}, canonical witness: {}",
            r.alpha, r.density, r.witness_is_canonical
        );
    }
}
