//! Averages of invariants over uniform random grids, with line fits.

use gridknot::stats::{fit_line, run_experiment, to_csv};

fn main() -> gridknot::Result<()> {
    let recs = run_experiment(10, 60, 10, 200, 1)?;
    print!("{}", to_csv(&recs)?);
    let fit = |f: fn(&gridknot::stats::StatsRecord) -> f64| {
        fit_line(&recs.iter().map(|r| (r.n as f64, f(r))).collect::<Vec<_>>())
    };
    println!("length/n slope {:.4}", fit(|r| r.len_over_n.mean)?.0);
    println!("crossings/n slope {:.4}", fit(|r| r.cross_over_n.mean)?.0);
    println!("tb slope {:.4}", fit(|r| r.tb.mean)?.0);
    for r in &recs {
        println!(
            "n = {:>2}: P(knot) = {:.3}",
            r.n,
            r.comp_hist[0] as f64 / r.samples as f64
        );
    }
    Ok(())
}
