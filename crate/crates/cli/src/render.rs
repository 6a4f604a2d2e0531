//! Text rendering helpers.

use hypercc::motif::Table1;

/// `x` rounded to `digits` significant digits, trailing zeros trimmed.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Smallest-denominator fraction `p/q` (q ≤ 12) within 1e-12 of `x`, or the
/// 12-digit decimal when none exists.
pub fn fraction(x: f64) -> String {
    for q in 1..=12u32 {
        let p = (x * q as f64).round();
        if (p / q as f64 - x).abs() <= 1e-12 {
            return if q == 1 {
                format!("{}", p as i64)
            } else {
                format!("{}/{}", p as i64, q)
            };
        }
    }
    significant(x, 12)
}

/// Aligned text table: one row per definition, one column per motif, each
/// cell `decimal (fraction)`.
pub fn table1_text(t: &Table1) -> String {
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend(t.columns.iter().map(|c| c.to_string()));
    grid.push(header);
    for (d, vals) in &t.rows {
        let mut row = vec![d.column().to_string()];
        row.extend(vals.iter().map(|&v| {
            let dec = significant(v, 12);
            let frac = fraction(v);
            if dec == frac {
                dec
            } else {
                format!("{dec} ({frac})")
            }
        }));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    let mut out = String::new();
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (cell, w))| {
                if c == 0 {
                    format!("{cell:<w$}")
                } else {
                    format!("{cell:>w$}")
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub const HIST_PLOT_STUB: &str = r#"# Plots hist.csv written by `hypercc hist --out <dir>`.
import csv, collections
import matplotlib.pyplot as plt

rows = collections.defaultdict(list)
with open("hist.csv") as f:
    for r in csv.DictReader(f):
        rows[r["definition"]].append((float(r["lower"]), float(r["upper"]), int(r["count"])))

fig, axes = plt.subplots(1, len(rows), figsize=(4 * len(rows), 3), sharey=True)
for ax, (name, bins) in zip(axes if len(rows) > 1 else [axes], rows.items()):
    ax.bar([lo for lo, _, _ in bins], [c for _, _, c in bins],
           width=[hi - lo for lo, hi, _ in bins], align="edge", edgecolor="black")
    ax.set_title(name)
    ax.set_xlim(0, 1)
fig.tight_layout()
fig.savefig("hist.png", dpi=150)
"#;

pub const SCATTER_PLOT_STUB: &str = r#"# Plots scatter.csv written by `hypercc correlate --out <dir>`.
import csv
import matplotlib.pyplot as plt

with open("scatter.csv") as f:
    rows = list(csv.DictReader(f))
proposed = [float(r["c_proposed"]) for r in rows]
fig, axes = plt.subplots(1, 3, figsize=(12, 4), sharey=True)
for ax, name in zip(axes, ["c_opsahl", "c_zhou", "c_baseline"]):
    ax.scatter([float(r[name]) for r in rows], proposed, s=6)
    ax.set_xlabel(name)
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
axes[0].set_ylabel("c_proposed")
fig.tight_layout()
fig.savefig("scatter.png", dpi=150)
"#;
