//! Compiling the word languages to DFAs and counting their members.

use permfib::bijection::{is_in_w, tilings};
use permfib::word::all_words;
use permfib::{w_regex, z_regex};

fn main() -> permfib::Result<()> {
    let z = z_regex();
    let zd = z.compile();
    println!("Z = {z}  ({} DFA states)", zd.num_states());
    println!(
        "Z_4 = {:?}",
        zd.accepted_words(4)
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
    );
    println!("\n  k  |Z_k|  tilings");
    for (k, c) in zd.count_table(10).iter().enumerate().skip(1) {
        println!("{k:>3} {c:>6} {:>8}", tilings(k)?.len());
    }

    for m in 3..=5 {
        let re = w_regex(m)?;
        let dfa = re.compile();
        let counts = dfa.count_table(12);
        let brute: Vec<usize> = (0..=8)
            .map(|n| all_words(n).filter(|w| is_in_w(w, m)).count())
            .collect();
        println!("\nm = {m}: {re}");
        println!("  DFA counts  {:?}", &counts[..]);
        println!("  brute force {brute:?}");
    }

    let re = w_regex(3)?;
    let w = "acbca".parse()?;
    println!("\n{w} parses {} way(s) under m = 3", re.count_parses(&w));
    Ok(())
}
