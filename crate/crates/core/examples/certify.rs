//! Certify one (n, k) and print the certificate as JSON.

use setwise_ekr::certify::certify;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("n and k"));
    let n = args.next().unwrap_or(22);
    let k = args.next().unwrap_or(4);
    match certify(n, k) {
        Ok(c) => println!("{}", serde_json::to_string_pretty(&c).unwrap()),
        Err(e) => eprintln!("{e}"),
    }
}
