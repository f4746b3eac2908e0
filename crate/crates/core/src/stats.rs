//! Monte Carlo statistics of invariants of uniform random grids.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{sample_uniform, substream};
use crate::invariants::{
    crossing_number, grid_length, number_of_components, rotation_number, thurston_bennequin, writhe,
};

/// Mean and sample standard deviation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Summary {
        let n = values.len();
        if n == 0 {
            return Summary::default();
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let var = if n > 1 {
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64
        } else {
            0.0
        };
        Summary {
            mean,
            std: var.sqrt(),
        }
    }

    /// Standard error of the mean for `samples` draws.
    pub fn standard_error(&self, samples: usize) -> f64 {
        self.std / (samples as f64).sqrt()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub n: usize,
    pub samples: usize,
    pub len_over_n: Summary,
    pub cross_over_n: Summary,
    pub writhe: Summary,
    pub tb: Summary,
    pub rot: Summary,
    pub components: Summary,
    /// Counts of 1, 2, 3, 4 and 5 or more components.
    pub comp_hist: [usize; 5],
}

#[derive(Clone, Copy)]
struct Sample {
    length: usize,
    crossings: usize,
    writhe: i64,
    tb: i64,
    rot: i64,
    components: usize,
}

/// Substream used for sample `i` at grid number `n`.
pub fn sample_stream(n: usize, i: usize) -> u64 {
    ((n as u64) << 32) | i as u64
}

fn measure(n: usize, seed: u64, i: usize) -> Sample {
    let g = sample_uniform(n, &mut substream(seed, sample_stream(n, i)));
    Sample {
        length: grid_length(&g),
        crossings: crossing_number(&g),
        writhe: writhe(&g),
        tb: thurston_bennequin(&g),
        rot: rotation_number(&g),
        components: number_of_components(&g),
    }
}

fn aggregate(n: usize, samples: &[Sample]) -> StatsRecord {
    let col = |f: &dyn Fn(&Sample) -> f64| Summary::of(&samples.iter().map(f).collect::<Vec<_>>());
    let nf = n as f64;
    let mut comp_hist = [0; 5];
    for s in samples {
        comp_hist[s.components.min(5) - 1] += 1;
    }
    StatsRecord {
        n,
        samples: samples.len(),
        len_over_n: col(&|s| s.length as f64 / nf),
        cross_over_n: col(&|s| s.crossings as f64 / nf),
        writhe: col(&|s| s.writhe as f64),
        tb: col(&|s| s.tb as f64),
        rot: col(&|s| s.rot as f64),
        components: col(&|s| s.components as f64),
        comp_hist,
    }
}

/// Grid numbers `n_min, n_min + step, ...` up to `n_max`.
pub fn grid_numbers(n_min: usize, n_max: usize, step: usize) -> Result<Vec<usize>> {
    if n_min < 2 || n_max < n_min || step == 0 {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= n_min <= n_max and step > 0, got {n_min}..{n_max} step {step}"
        )));
    }
    Ok((n_min..=n_max).step_by(step).collect())
}

/// One record per grid number. Samples are drawn in parallel, each from its
/// own substream, and reduced in index order, so the result does not depend
/// on the thread count.
pub fn run_experiment(
    n_min: usize,
    n_max: usize,
    step: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<StatsRecord>> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let ns = grid_numbers(n_min, n_max, step)?;
    let tasks: Vec<(usize, usize)> = ns
        .iter()
        .flat_map(|&n| (0..samples).map(move |i| (n, i)))
        .collect();
    let measured: Vec<Sample> = tasks
        .par_iter()
        .map(|&(n, i)| measure(n, seed, i))
        .collect();
    Ok(ns
        .iter()
        .zip(measured.chunks(samples))
        .map(|(&n, chunk)| aggregate(n, chunk))
        .collect())
}

/// Ordinary least squares, returning `(slope, intercept)`.
pub fn fit_line(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 2 {
        return Err(Error::DegenerateInput);
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    Ok((slope, my - slope * mx))
}

pub const CSV_HEADER: [&str; 18] = [
    "n",
    "samples",
    "len_over_n_mean",
    "len_over_n_std",
    "cross_over_n_mean",
    "cross_over_n_std",
    "writhe_mean",
    "writhe_std",
    "tb_mean",
    "tb_std",
    "rot_mean",
    "rot_std",
    "comp_mean",
    "comp_hist_1",
    "comp_hist_2",
    "comp_hist_3",
    "comp_hist_4",
    "comp_hist_5plus",
];

pub fn write_csv<W: Write>(records: &[StatsRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        let mut row = vec![r.n.to_string(), r.samples.to_string()];
        for s in [r.len_over_n, r.cross_over_n, r.writhe, r.tb, r.rot] {
            row.push(s.mean.to_string());
            row.push(s.std.to_string());
        }
        row.push(r.components.mean.to_string());
        row.extend(r.comp_hist.iter().map(|c| c.to_string()));
        w.write_record(&row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv(records: &[StatsRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

/// Scatter plot of `points` with the least-squares line drawn over it.
pub fn plot_svg(title: &str, points: &[(f64, f64)]) -> String {
    let (w, h, pad) = (480.0, 320.0, 40.0);
    let bounds = |f: fn(&(f64, f64)) -> f64| {
        let lo = points.iter().map(f).fold(f64::INFINITY, f64::min);
        let hi = points.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
        if lo.is_finite() && hi > lo {
            (lo, hi)
        } else {
            (lo.min(0.0) - 1.0, hi.max(0.0) + 1.0)
        }
    };
    let (x0, x1) = bounds(|p| p.0);
    let (y0, y1) = bounds(|p| p.1);
    let sx = |x: f64| pad + (x - x0) / (x1 - x0) * (w - 2.0 * pad);
    let sy = |y: f64| h - pad - (y - y0) / (y1 - y0) * (h - 2.0 * pad);
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    );
    s += &format!(
        "<text x=\"{pad}\" y=\"20\" font-size=\"14\">{}</text>\n",
        escape(title)
    );
    s += &format!(
        "<line x1=\"{pad}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n\
         <line x1=\"{pad}\" y1=\"{pad}\" x2=\"{pad}\" y2=\"{b}\" stroke=\"black\"/>\n",
        b = h - pad,
        r = w - pad
    );
    for &(x, y) in points {
        s += &format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\"/>\n",
            sx(x),
            sy(y)
        );
    }
    if let Ok((m, c)) = fit_line(points) {
        s += &format!(
            "<line class=\"fit\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"red\"/>\n",
            sx(x0),
            sy(m * x0 + c),
            sx(x1),
            sy(m * x1 + c)
        );
        s += &format!(
            "<text x=\"{pad}\" y=\"{}\" font-size=\"12\">slope {m:.4}</text>\n",
            h - 10.0
        );
    }
    s += "</svg>\n";
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub type Panel = (&'static str, fn(&StatsRecord) -> f64);

/// Panels written by [`write_plots`], as (file stem, extractor).
pub const PANELS: [Panel; 6] = [
    ("len_over_n", |r| r.len_over_n.mean),
    ("cross_over_n", |r| r.cross_over_n.mean),
    ("writhe", |r| r.writhe.mean),
    ("tb", |r| r.tb.mean),
    ("rot", |r| r.rot.mean),
    ("one_component", |r| {
        r.comp_hist[0] as f64 / r.samples as f64
    }),
];

/// One SVG per panel in `dir`, which is created if missing.
pub fn write_plots(records: &[StatsRecord], dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, f) in PANELS {
        let pts: Vec<(f64, f64)> = records.iter().map(|r| (r.n as f64, f(r))).collect();
        std::fs::write(dir.join(format!("{name}.svg")), plot_svg(name, &pts))?;
    }
    Ok(())
}
