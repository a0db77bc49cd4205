//! Runs every claim at its default bounds and prints one report per line.

use permfib::oracle::{Claim, Oracle};

fn main() {
    let oracle = Oracle::default();
    let mut failed = 0;
    for claim in Claim::ALL {
        match oracle.run_claim(claim, None, None) {
            Ok(r) => {
                failed += usize::from(!r.pass);
                println!("{r}");
            }
            Err(e) => {
                failed += 1;
                println!("ERROR {}: {e}", claim.name());
            }
        }
    }
    std::process::exit(i32::from(failed > 0));
}
