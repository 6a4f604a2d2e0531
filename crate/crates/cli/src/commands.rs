use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use hypercc::analysis::{CorrelationReport, HistogramSet};
use hypercc::ingest::{self, PreprocessOptions, Provenance};
use hypercc::motif::table1_matrix;
use hypercc::oracle::{naive_cc_all, naive_census, naive_table1};
use hypercc::{
    cc_all_with, census_order3, CCReport, Execution, Hypergraph, Induction, MotifCensus,
    Selection, SummaryStats,
};

use crate::render;
use crate::{Cli, Command, Failure, FormatArg, InputArgs, OnlyArg};

pub fn run(cli: &Cli) -> Result<(), Failure> {
    let ctx = Context {
        json: cli.json,
        out: cli.out.clone(),
        exec: match cli.threads {
            Some(n) if n.get() == 1 => Execution::Sequential,
            _ => Execution::Parallel,
        },
        oracle: cli.oracle,
    };
    if let Some(dir) = &ctx.out {
        fs::create_dir_all(dir)
            .map_err(|e| Failure::compute(format!("cannot create {}: {e}", dir.display())))?;
    }
    match &cli.command {
        Command::Stats(input) => ctx.stats(input),
        Command::Cc { input, only } => ctx.cc(input, selection(only)),
        Command::Motifs {
            input,
            motif_induction,
        } => ctx.motifs(input, (*motif_induction).into()),
        Command::Correlate(input) => ctx.correlate(input),
        Command::Hist { input, only, bins } => ctx.hist(input, selection(only), *bins as usize),
        Command::Table1 => ctx.table1(),
    }
}

fn selection(only: &OnlyArg) -> Selection {
    if only.only.is_empty() {
        Selection::all()
    } else {
        only.only.iter().map(|&d| d.into()).collect()
    }
}

struct Context {
    json: bool,
    out: Option<PathBuf>,
    exec: Execution,
    oracle: bool,
}

fn guess_format(path: &Path) -> FormatArg {
    let s = path.to_string_lossy();
    if path.is_dir()
        || s.ends_with("-nverts.txt")
        || Path::new(&format!("{s}-nverts.txt")).is_file()
    {
        FormatArg::Benson
    } else {
        FormatArg::Edgelist
    }
}

fn load(input: &InputArgs) -> Result<(Hypergraph, Provenance), Failure> {
    let raw = match input.format.unwrap_or_else(|| guess_format(&input.input)) {
        FormatArg::Benson => {
            let (nverts, simplices) = ingest::benson_paths(&input.input)?;
            ingest::parse_benson(&nverts, &simplices)?
        }
        FormatArg::Edgelist => ingest::parse_edgelist(&input.input)?,
    };
    let opts = PreprocessOptions {
        drop_singletons: input.drop_singletons,
        take_lcc: !input.no_lcc,
    };
    Ok(ingest::preprocess(&raw, opts)?)
}

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

impl Context {
    fn file(&self, name: &str) -> Result<Option<BufWriter<fs::File>>, Failure> {
        let Some(dir) = &self.out else {
            return Ok(None);
        };
        let path = dir.join(name);
        let f = fs::File::create(&path)
            .map_err(|e| Failure::compute(format!("cannot create {}: {e}", path.display())))?;
        Ok(Some(BufWriter::new(f)))
    }

    fn write_json<T: Serialize>(&self, name: &str, value: &T) -> Result<(), Failure> {
        if let Some(mut f) = self.file(name)? {
            serde_json::to_writer_pretty(&mut f, value)?;
            writeln!(f)?;
            f.flush()?;
        }
        Ok(())
    }

    fn write_text(&self, name: &str, text: &str) -> Result<(), Failure> {
        if let Some(mut f) = self.file(name)? {
            f.write_all(text.as_bytes())?;
            f.flush()?;
        }
        Ok(())
    }

    fn report(&self, h: &Hypergraph, sel: Selection) -> CCReport {
        if self.oracle {
            naive_cc_all(h, sel)
        } else {
            cc_all_with(h, sel, self.exec)
        }
    }

    fn stats(&self, input: &InputArgs) -> Result<(), Failure> {
        let (h, provenance) = load(input)?;
        let stats = h.summary_stats();
        #[derive(Serialize)]
        struct Out {
            stats: SummaryStats,
            provenance: Provenance,
        }
        let out = Out { stats, provenance };
        self.write_json("stats.json", &out)?;
        if let Some(mut f) = self.file("stats.csv")? {
            writeln!(f, "nodes,edges,bipartite_edges,avg_degree,avg_edge_size")?;
            writeln!(
                f,
                "{},{},{},{},{}",
                stats.nodes, stats.edges, stats.bipartite_edges, stats.avg_degree, stats.avg_edge_size
            )?;
            f.flush()?;
        }
        let mut o = stdout();
        if self.json {
            serde_json::to_writer_pretty(&mut o, &out)?;
            writeln!(o)?;
        } else {
            let p = &provenance;
            writeln!(o, "N\t{}", stats.nodes)?;
            writeln!(o, "M\t{}", stats.edges)?;
            writeln!(o, "bipartite_edges\t{}", stats.bipartite_edges)?;
            writeln!(o, "avg_degree\t{}", render::significant(stats.avg_degree, 6))?;
            writeln!(o, "avg_edge_size\t{}", render::significant(stats.avg_edge_size, 6))?;
            writeln!(o, "raw_edges\t{}", p.raw_edge_count)?;
            writeln!(o, "duplicates_removed\t{}", p.duplicates_removed)?;
            writeln!(o, "singletons_removed\t{}", p.singletons_removed)?;
            writeln!(o, "nodes_dropped_by_lcc\t{}", p.nodes_dropped_by_lcc)?;
            writeln!(o, "edges_dropped_by_lcc\t{}", p.edges_dropped_by_lcc)?;
        }
        o.flush()?;
        Ok(())
    }

    fn cc(&self, input: &InputArgs, sel: Selection) -> Result<(), Failure> {
        let (h, _) = load(input)?;
        let report = self.report(&h, sel);
        self.write_json("cc.json", &report)?;
        if let Some(mut f) = self.file("cc.csv")? {
            report.write_csv(&mut f)?;
            f.flush()?;
        }
        let mut o = stdout();
        match (self.json, self.out.is_some()) {
            (true, false) => {
                serde_json::to_writer_pretty(&mut o, &report)?;
                writeln!(o)?;
            }
            (true, true) => {
                serde_json::to_writer_pretty(&mut o, &report.averages())?;
                writeln!(o)?;
            }
            (false, false) => report.write_csv(&mut o)?,
            (false, true) => {
                for d in sel.iter() {
                    writeln!(o, "mean {}\t{}", d.column(), report.average(d).unwrap())?;
                }
            }
        }
        o.flush()?;
        Ok(())
    }

    fn motifs(&self, input: &InputArgs, induction: Induction) -> Result<(), Failure> {
        let (h, _) = load(input)?;
        let census: MotifCensus = if self.oracle {
            naive_census(&h, induction)
        } else {
            census_order3(&h, induction, self.exec)
        };
        self.write_json("motifs.json", &census)?;
        if let Some(mut f) = self.file("motifs.csv")? {
            census.write_csv(&mut f)?;
            f.flush()?;
        }
        let mut o = stdout();
        if self.json {
            serde_json::to_writer_pretty(&mut o, &census)?;
            writeln!(o)?;
        } else {
            census.write_csv(&mut o)?;
        }
        o.flush()?;
        Ok(())
    }

    fn correlate(&self, input: &InputArgs) -> Result<(), Failure> {
        let (h, _) = load(input)?;
        let report = self.report(&h, Selection::all());
        let corr = CorrelationReport::from_report(&report)?;
        self.write_json("correlations.json", &corr)?;
        if let Some(mut f) = self.file("scatter.csv")? {
            report.write_csv(&mut f)?;
            f.flush()?;
        }
        self.write_text("plot_scatter.py", render::SCATTER_PLOT_STUB)?;
        let mut o = stdout();
        if self.json {
            serde_json::to_writer_pretty(&mut o, &corr)?;
            writeln!(o)?;
        } else {
            let show = |r: Option<f64>| r.map_or_else(|| "undefined".to_string(), |x| x.to_string());
            writeln!(o, "rho_OP\t{}", show(corr.rho_op))?;
            writeln!(o, "rho_ZP\t{}", show(corr.rho_zp))?;
            writeln!(o, "rho_SP\t{}", show(corr.rho_sp))?;
        }
        o.flush()?;
        Ok(())
    }

    fn hist(&self, input: &InputArgs, sel: Selection, bins: usize) -> Result<(), Failure> {
        let (h, _) = load(input)?;
        let report = self.report(&h, sel);
        let set = HistogramSet::from_report(&report, bins)?;
        self.write_json("hist.json", &set)?;
        if let Some(mut f) = self.file("hist.csv")? {
            set.write_csv(&mut f)?;
            f.flush()?;
        }
        self.write_text("plot_hist.py", render::HIST_PLOT_STUB)?;
        let mut o = stdout();
        if self.json {
            serde_json::to_writer_pretty(&mut o, &set)?;
            writeln!(o)?;
        } else {
            set.write_csv(&mut o)?;
        }
        o.flush()?;
        Ok(())
    }

    fn table1(&self) -> Result<(), Failure> {
        let table = if self.oracle {
            naive_table1()
        } else {
            table1_matrix()
        };
        self.write_json("table1.json", &table)?;
        if let Some(mut f) = self.file("table1.csv")? {
            table.write_csv(&mut f)?;
            f.flush()?;
        }
        let mut o = stdout();
        if self.json {
            serde_json::to_writer_pretty(&mut o, &table)?;
            writeln!(o)?;
        } else {
            o.write_all(render::table1_text(&table).as_bytes())?;
            writeln!(o)?;
            table.write_csv(&mut o)?;
        }
        o.flush()?;
        Ok(())
    }
}
