//! Every composition of n is the descent composition of exactly one
//! permutation with no inverse peaks; counting those that also avoid a
//! long increasing run gives higher-order Fibonacci numbers.

use permfib::bijection::zero_ipk_permutation;
use permfib::oracle::Oracle;
use permfib::{composition_reverse, compositions, fib, Composition};

fn main() -> permfib::Result<()> {
    let l = Composition::new(vec![3, 2, 3, 1])?;
    let p = zero_ipk_permutation(&l)?;
    println!("descent composition {l} -> {p} (ipk = {})", p.ipk());
    println!("reverse composition {}", composition_reverse(&l));

    println!("\nall of n = 4:");
    for l in compositions(4, None)? {
        println!("  {:<10} {}", l.to_string(), zero_ipk_permutation(&l)?);
    }

    let oracle = Oracle::default();
    println!("\n  n  m=3  f2   m=4  f3   m=5  f4");
    for n in 1..=9 {
        print!("{n:>3}");
        for m in 3..=5 {
            let count = oracle.count_ipk0_avoiders(n, m)?;
            print!("  {count:>3} {:>3}", fib(m - 1, n as i64)?);
        }
        println!();
    }
    Ok(())
}
