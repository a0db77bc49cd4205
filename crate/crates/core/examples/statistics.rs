//! Peak, valley and descent statistics of a permutation and its inverse.
//!
//!     cargo run --example statistics -- 2 3 5 6 8 7 1 4

use permfib::Permutation;

fn main() -> permfib::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = if args.is_empty() {
        "2 3 5 6 8 7 1 4".to_string()
    } else {
        args.join(" ")
    };
    let p: Permutation = text.parse()?;
    let s = p.statistics();
    println!("permutation      {p}");
    println!("inverse          {}", p.inverse());
    println!(
        "descents         {:?} (des = {})",
        s.descent_positions, s.des
    );
    println!("peaks            {:?} (pk = {})", s.peak_positions, s.pk);
    println!(
        "left peaks       {:?} (lpk = {})",
        s.left_peak_positions, s.lpk
    );
    println!("right valleys    {:?}", s.right_valley_positions);
    println!(
        "rpk = {}  valleys = {}  right valleys = {}",
        s.rpk, s.valleys, s.right_valleys
    );
    println!("ipk = {}  ilpk = {}", s.ipk, s.ilpk);
    println!("descent composition {}", p.descent_composition());
    for m in 3..=4 {
        let inc = Permutation::identity(m);
        let dec = Permutation::decreasing(m);
        println!(
            "avoids consecutive {inc}: {}   {dec}: {}",
            p.avoids_consecutive(&inc)?,
            p.avoids_consecutive(&dec)?
        );
    }
    Ok(())
}
