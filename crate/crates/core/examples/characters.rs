//! Character values of the low-dimensional shapes on the k = 4, even n
//! classes, plus a couple of dimensions.

use setwise_ekr::characters::{dimension, mn_character};
use setwise_ekr::partitions::Partition;
use setwise_ekr::weights::Family;

fn main() {
    let n = 22;
    let family = Family::K4Even;
    let classes = family.classes(n);
    print!("{:<16}", "shape");
    for c in &classes {
        print!("{:>12}", c.to_string());
    }
    println!();
    for tail in family.table_row_tails() {
        let mut parts = vec![n - tail.iter().sum::<u32>()];
        parts.extend_from_slice(tail);
        let shape = Partition::new(parts).unwrap();
        print!("{:<16}", shape.to_string());
        for c in &classes {
            print!("{:>12}", mn_character(&shape, c));
        }
        println!();
    }
    let hook = Partition::new(vec![19, 2, 1]).unwrap();
    println!("dim {hook} = {}", dimension(&hook));
}
