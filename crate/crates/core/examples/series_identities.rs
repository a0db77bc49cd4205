//! Exact power series: the v(t) substitution, the two bivariate identities,
//! and the rational generating function of the one-left-peak counts.

use permfib::series::{
    check_theorem3, check_theorem5, integer_coefficients, ogf_fib, ogf_ilpk_general, v_of_t,
};

fn main() -> permfib::Result<()> {
    println!("v(t) = {}", v_of_t(5)?);
    for m in 2..=4 {
        for (name, check) in [
            ("ipk", check_theorem3 as fn(_, _, _) -> _),
            ("ilpk", check_theorem5),
        ] {
            match check(m, 7, 5)? {
                None => println!("{name} identity, m = {m}: equal through x^7 t^5"),
                Some(mismatch) => println!("{name} identity, m = {m}: {mismatch}"),
            }
        }
    }
    for m in 3..=5 {
        let s = ogf_ilpk_general(m, 12)?;
        println!(
            "ilpk = 1, m = {m}: {:?}",
            integer_coefficients(&s).unwrap_or_default()
        );
    }
    println!("fibonacci ogf, m = 4: {}", ogf_fib(4, 10)?.display_in("x"));
    Ok(())
}
