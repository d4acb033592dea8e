//! Which complete graphs mix, when, and how far the others stay from uniform.

use qwalk::cli::pi_fraction;
use qwalk::mixing::{certify_complete, Verdict};

fn main() -> qwalk::Result<()> {
    for n in 2..=12 {
        let r = certify_complete(n)?;
        match r.verdict {
            Verdict::Mixes => {
                let times: Vec<String> = r
                    .witness_times
                    .iter()
                    .map(|&t| pi_fraction(t).unwrap_or_else(|| format!("{t:.6}")))
                    .collect();
                println!("K_{n:<3} mixes at {}", times.join(", "));
            }
            _ => println!(
                "K_{n:<3} never uniform: deficit {:.6}, TV at least {:.6} (attained at t = {:.6})",
                r.deficit.unwrap(),
                r.min_distance,
                r.min_time.unwrap()
            ),
        }
    }
    Ok(())
}
