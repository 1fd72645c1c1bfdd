//! Closed-form class weights for each family, and the same weights
//! recovered by solving the family's linear system.

use setwise_ekr::weights::{solve_constraint_system, Family};

fn main() {
    for family in Family::ALL {
        let n = family.certified_min() + 4;
        let n = if (n % 2 == 0) == family.even_n() { n } else { n + 1 };
        let scheme = family.closed_form(n).unwrap();
        println!("{family}, n = {n}");
        for e in &scheme.entries {
            println!("  {:<20} {}", e.class.to_string(), e.weight);
        }
        let solved = solve_constraint_system(&family.constraint_system(n)).unwrap();
        println!("  linear system agrees: {}", solved == scheme);
    }
}
