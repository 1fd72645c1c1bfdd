//! The full spectrum of the closed-form weighted adjacency matrix at
//! (n, k) = (22, 4): extreme values and where they occur.

use setwise_ekr::schemes::full_spectrum;
use setwise_ekr::weights::Family;

fn main() {
    let scheme = Family::K4Even.closed_form(22).unwrap();
    let spectrum = full_spectrum(&scheme);
    println!("{} shapes", spectrum.values.len());
    let show = |set: std::collections::BTreeSet<_>| {
        set.iter().map(|p: &setwise_ekr::partitions::Partition| p.to_string()).collect::<Vec<_>>().join(" ")
    };
    println!("max {} at {}", spectrum.max(), show(spectrum.argmax()));
    println!("min {} at {}", spectrum.min(), show(spectrum.argmin()));
    println!("sum of f^2 * eigenvalue = {}", spectrum.moment(1));
}
