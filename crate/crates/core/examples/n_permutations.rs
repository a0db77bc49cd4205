//! Permutations with a single left peak, their word encoding, and the
//! (j, k, tiling) triple for those whose inverse avoids consecutive 321.

use permfib::bijection::{canonical_decomposition, nprime_to_triple, phi, phi_inverse};
use permfib::regex::{format_blocks, split_w_word, unique_factor_decomposition};
use permfib::Permutation;

fn show(text: &str) -> permfib::Result<()> {
    let p: Permutation = text.parse()?;
    let d = canonical_decomposition(&p)?;
    let w = phi(&p)?;
    println!("{p}");
    println!(
        "  alpha {:?} beta {:?} gamma {:?}",
        d.alpha, d.beta, d.gamma
    );
    println!("  phi   {w}");
    assert_eq!(phi_inverse(&w)?, p);
    match nprime_to_triple(&p) {
        Ok(t) => {
            let s = split_w_word(&w)?;
            println!("  j = {}, k = {}, z = {}", t.j, t.k, s.z);
            println!(
                "  blocks {}",
                format_blocks(&unique_factor_decomposition(&s.z)?)
            );
            for line in t.tiling.render_ascii().lines() {
                println!("  {line}");
            }
        }
        Err(e) => println!("  no triple: {e}"),
    }
    Ok(())
}

fn main() -> permfib::Result<()> {
    show("1 2 5 10 12 8 6 4 3 7 9 11")?;
    show("1 2 8 9 10 14 16 17 12 11 4 3 5 6 7 13 15 18 19 20")?;
    show("3 4 2 1 5")?;
    if let Err(e) = show("2 1 4 3") {
        println!("2 1 4 3: {e}");
    }
    Ok(())
}
