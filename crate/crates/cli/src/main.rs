//! `ncpaths`: generate, convert, count and verify noncrossing path pairs,
//! partitions, vacillating tableaux and plane partitions.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but violates a
//! precondition (a crossing pair, a failed verify suite), 2 on usage or
//! parse errors.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ncpaths", version, about = "Noncrossing Dyck path pairs, partitions and tableaux")]
struct Cli {
    /// Output format; json emits one JSON value per line.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Free Dyck paths of half-length n.
    FreeDyck,
    /// Dyck paths of half-length n.
    Dyck,
    /// Noncrossing k-tuples of free Dyck paths of half-length n.
    NcTuples,
    /// Set partitions of [m].
    Partitions,
    /// Noncrossing partitions of [m] with the given number of blocks.
    NcPartitions,
    /// Plane partitions in the n x n x k box.
    PlanePartitions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjKind {
    /// Two free Dyck paths, "UUDD,DUDU".
    Pair,
    /// Set partition, "14-23-5".
    Partition,
    /// Vacillating tableau, "(e,e,1,e,e)".
    Vt,
    /// Dyck path, "UUDDUD".
    Dyck,
    /// Arc diagram, "5:(1,4)(2,3)".
    Arcs,
    /// Noncrossing tuple of free Dyck paths, "UD,UD,DU".
    Tuple,
    /// Plane partition, "2,1;1".
    Pp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    /// Two-phase map through a vacillating tableau.
    Tableau,
    /// Direct pairing of half arcs.
    Halfarc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    /// Noncrossing pairs of free Dyck paths, F(n,2).
    NcPairs,
    /// Noncrossing k-tuples, F(n,k).
    Tuples,
    /// Plane partitions in B(n,n,k); with --q the generating function.
    BoxPp,
    /// Narayana number N(m,j).
    Narayana,
    /// Catalan number C_m.
    Catalan,
    /// Noncrossing partitions of [m] with the given number of blocks.
    NcPartitions,
    /// Dyck paths of half-length m with j up steps at odd positions.
    OddUpDyck,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream every object of a kind, one per line.
    Generate {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(short, long)]
        m: Option<usize>,
        #[arg(short, long)]
        blocks: Option<usize>,
    },
    /// Convert objects; reads standard input (one per line) when no payload
    /// is given.
    Convert {
        #[arg(value_enum)]
        from: ObjKind,
        #[arg(value_enum)]
        to: ObjKind,
        payload: Vec<String>,
        /// Route used for pair -> partition.
        #[arg(long, value_enum, default_value_t = Via::Tableau)]
        via: Via,
        /// Half-length for pp -> tuple.
        #[arg(short, long)]
        n: Option<usize>,
        /// Tuple size for pp -> tuple.
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Print an exact count.
    Count {
        #[arg(value_enum)]
        object: CountKind,
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(short, long)]
        m: Option<usize>,
        #[arg(short, long)]
        j: Option<usize>,
        #[arg(short, long)]
        blocks: Option<usize>,
        /// Print the q-generating function instead of the count.
        #[arg(long)]
        q: bool,
        /// Count by exhaustive enumeration instead of a formula.
        #[arg(long)]
        brute: bool,
    },
    /// Run exhaustive self-checks; exit 1 on the first counterexample.
    Verify {
        /// zeta, halfarc, labelle, vt, crne, planepp, counts or all.
        suite: String,
        #[arg(long = "max-n", default_value_t = 3)]
        max_n: usize,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
    /// cr, ne, block and arc counts of partitions; reads standard input when
    /// no partition is given.
    Stats { partitions: Vec<String> },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Generate { kind, n, k, m, blocks } => commands::generate(&mut out, cli.format, kind, n, k, m, blocks),
        Command::Convert {
            from,
            to,
            payload,
            via,
            n,
            k,
        } => commands::convert(&mut out, cli.format, from, to, &payload, via, n, k),
        Command::Count {
            object,
            n,
            k,
            m,
            j,
            blocks,
            q,
            brute,
        } => commands::count(
            &mut out,
            cli.format,
            object,
            commands::CountParams { n, k, m, j, blocks },
            q,
            brute,
        ),
        Command::Verify { suite, max_n, json } => {
            let format = if json { Format::Json } else { cli.format };
            commands::verify(&mut out, format, &suite, max_n)
        }
        Command::Stats { partitions } => commands::stats(&mut out, cli.format, &partitions),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ncpaths: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
