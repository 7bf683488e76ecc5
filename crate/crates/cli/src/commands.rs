use std::path::{Path, PathBuf};

use liminal_core::bounds::{closed_form_root, parse_rational, rat, rational_string, strong_path_root, CLOSED_FORM_TOLERANCE};
use liminal_core::burn::{cooling_sequence_on, play_sequence, replay_trace, RoundRecord, SequenceFile, SourceSequence};
use liminal_core::graph::{Family, DEFAULT_VERTEX_BUDGET};
use liminal_core::report;
use liminal_core::solve::{
    burning_number, cooling_number, liminal_sweep, liminal_value, Budget, GameKind, Move, SolveResult,
};
use liminal_core::tiling::{k_star_lower_bound, pack_1d, pack_small_2d};
use liminal_core::{Error, Graph, GraphSpec};
use num::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::{Format, Game, Suite};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// Unsolved within budget; `partial` holds whatever output is still meaningful.
    #[error("{error}")]
    Unsolved { error: Error, partial: Option<String> },
    #[error(transparent)]
    Core(Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Service(#[from] liminal_service::ServiceError),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted { .. } | Error::SizeLimit { .. } => CliError::Unsolved { error: e, partial: None },
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Unsolved { .. } => 3,
            CliError::Core(Error::Parse(_) | Error::InvalidGraph(_) | Error::OutOfRange(_)) => 2,
            _ => 1,
        }
    }
}

type Out = Result<String, CliError>;

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Out {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn build(spec: &str) -> Result<(String, Graph), CliError> {
    let spec: GraphSpec = spec.parse()?;
    let g = spec.build_with_budget(DEFAULT_VERTEX_BUDGET)?;
    Ok((spec.to_string(), g))
}

#[derive(Serialize)]
struct SolveOut {
    graph: String,
    game: GameKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    value: u32,
    principal_line: Vec<Move>,
    nodes_expanded: u64,
}

pub fn solve(spec: &str, game: Game, k: Option<usize>, budget: impl Fn(Budget) -> Budget) -> Out {
    let (graph, g) = build(spec)?;
    let r: SolveResult = match game {
        Game::Burn => burning_number(&g, &budget(Budget::burning()))?,
        Game::Cool => cooling_number(&g, &budget(Budget::cooling()))?,
        Game::Liminal => {
            let k = k.ok_or_else(|| CliError::Usage("--k is required for the liminal game".into()))?;
            liminal_value(&g, k, &budget(Budget::liminal()))?
        }
    };
    Ok(json(&SolveOut {
        graph,
        game: r.kind,
        k: if game == Game::Liminal { k } else { None },
        value: r.value,
        principal_line: r.principal_line,
        nodes_expanded: r.nodes_expanded,
    }))
}

#[derive(Serialize)]
struct Construction {
    sources: Vec<usize>,
    rounds: u32,
}

#[derive(Serialize)]
struct CoolOut {
    graph: String,
    cooling_number: Option<u32>,
    principal_line: Option<Vec<Move>>,
    /// The explicit sequence on strong products of paths.
    construction: Option<Construction>,
}

pub fn cool(spec: &str, budget: &Budget) -> Out {
    let (graph, g) = build(spec)?;
    let construction = match g.family() {
        Family::StrongPath { n, d } if *n >= 2 && *d >= 2 => {
            let seq = cooling_sequence_on(&g)?;
            let rounds = play_sequence(&g, &seq)?;
            Some(Construction { sources: seq.sources, rounds })
        }
        _ => None,
    };
    let exact = cooling_number(&g, budget);
    let out = CoolOut {
        graph,
        cooling_number: exact.as_ref().ok().map(|r| r.value),
        principal_line: exact.as_ref().ok().map(|r| r.principal_line.clone()),
        construction,
    };
    match exact {
        Ok(_) => Ok(json(&out)),
        Err(e @ (Error::BudgetExhausted { .. } | Error::SizeLimit { .. })) => {
            Err(CliError::Unsolved { error: e, partial: Some(json(&out)) })
        }
        Err(e) => Err(e.into()),
    }
}

pub fn sweep(spec: &str, k_max: Option<usize>, format: Format, budget: &Budget) -> Out {
    let (_, g) = build(spec)?;
    let s = liminal_sweep(&g, k_max.unwrap_or(g.order()), budget)?;
    match format {
        Format::Csv => csv_rows(&s.entries),
        Format::Json => Ok(json(&s)),
    }
}

#[derive(Serialize)]
struct BoundOut {
    n: u64,
    d: usize,
    x_star_interval: [String; 2],
    x_star_approx: f64,
    exact_root: Option<String>,
    floor_x_star: u64,
    is_integral: bool,
    /// Lower bound on the burning number.
    bound: u64,
    bound_rule: &'static str,
    closed_form: Option<f64>,
    closed_form_agrees: Option<bool>,
}

pub fn bound(n: u64, d: usize, tol: &str) -> Out {
    let tol = parse_rational(tol)?;
    if tol <= rat(0) || tol >= rat(1) {
        return Err(CliError::Usage("--tol must lie strictly between 0 and 1".into()));
    }
    if d == 0 {
        return Err(CliError::Usage("--d must be at least 1".into()));
    }
    let root = strong_path_root(n, d, &tol)?;
    // the king graph never tiles exactly, which buys one more round
    let kings = d == 2 && n >= 2;
    let closed = closed_form_root(n, d);
    let slack = CLOSED_FORM_TOLERANCE.max(tol.to_f64().unwrap_or(0.0));
    Ok(json(&BoundOut {
        n,
        d,
        x_star_interval: [rational_string(&root.lower), rational_string(&root.upper)],
        x_star_approx: root.approx(),
        exact_root: root.exact_root.as_ref().map(rational_string),
        floor_x_star: root.floor_x_star,
        is_integral: root.is_integral,
        bound: if kings { root.floor_x_star + 1 } else { root.floor_x_star },
        bound_rule: if kings { "floor(x*) + 1" } else { "floor(x*)" },
        closed_form: closed,
        closed_form_agrees: closed.map(|c| (c - root.approx()).abs() <= slack),
    }))
}

pub fn pack(n: usize, d: usize, m: usize, node_limit: u64) -> Out {
    if m == 0 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    let sides: Vec<usize> = (1..=m).rev().map(|i| 2 * i - 1).collect();
    match d {
        1 => Ok(json(&pack_1d(n, &sides)?)),
        2 => Ok(json(&pack_small_2d(n, m, node_limit)?.placements)),
        _ => Err(CliError::Usage(format!("packing search covers d = 1 and d = 2, got d = {d}"))),
    }
}

pub fn kstar(n: usize) -> Out {
    Ok(json(&k_star_lower_bound(n)?))
}

pub fn compare(
    suite: Suite,
    n_max: Option<u64>,
    k_max: u64,
    d: u64,
    format: Format,
    budget: impl Fn(Budget) -> Budget,
) -> Out {
    let one = |s: Suite| -> Result<(serde_json::Value, String), CliError> {
        macro_rules! emit {
            ($rows:expr) => {{
                let rows = $rows;
                (serde_json::to_value(&rows).expect("rows serialize"), csv_rows(&rows)?)
            }};
        }
        Ok(match s {
            Suite::Paths => emit!(report::paths_report(n_max.unwrap_or(7), k_max, &budget(Budget::liminal()))?),
            Suite::Kings => emit!(report::kings_report(n_max.unwrap_or(8), &budget(Budget::burning()))?),
            Suite::Cube => emit!(report::cube_report(n_max.unwrap_or(4), &budget(Budget::burning()))?),
            Suite::Sharp => emit!(report::sharp_paths_report(n_max.unwrap_or(5), &budget(Budget::burning()))?),
            Suite::Cooling => emit!(report::cooling_report(n_max.unwrap_or(12), d, &budget(Budget::cooling()))?),
            Suite::Kstar => emit!(report::kstar_report(n_max.unwrap_or(3), &budget(Budget::liminal()))?),
            Suite::All => unreachable!(),
        })
    };
    if suite != Suite::All {
        let (v, text) = one(suite)?;
        return Ok(match format {
            Format::Csv => text,
            Format::Json => json(&v),
        });
    }
    let suites = [
        ("paths", Suite::Paths),
        ("kings", Suite::Kings),
        ("cube", Suite::Cube),
        ("sharp", Suite::Sharp),
        ("cooling", Suite::Cooling),
        ("kstar", Suite::Kstar),
    ];
    let mut all = serde_json::Map::new();
    let mut text = String::new();
    for (name, s) in suites {
        let (v, t) = one(s)?;
        all.insert(name.to_string(), v);
        if !text.is_empty() {
            text.push('\n');
        }
        text.push_str(&format!("# {name}\n{t}"));
    }
    Ok(match format {
        Format::Csv => text,
        Format::Json => json(&all),
    })
}

#[derive(Serialize)]
struct ReplayOut {
    graph: String,
    sources: Vec<usize>,
    rounds: u32,
    trace: Vec<RoundRecord>,
}

pub fn replay(file: &Path) -> Out {
    let text = std::fs::read_to_string(file)?;
    let seq: SequenceFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let (graph, g) = build(&seq.graph)?;
    let trace = replay_trace(&g, &SourceSequence::new(seq.sources.clone()))?;
    let rounds = trace.last().map_or(0, |r| r.round);
    Ok(json(&ReplayOut { graph, sources: seq.sources, rounds, trace }))
}

pub fn serve(addr: &str, data_dir: Option<PathBuf>) -> Out {
    let manager = match data_dir {
        Some(dir) => liminal_service::SessionManager::open(dir)?,
        None => liminal_service::SessionManager::in_memory(),
    };
    let rt = tokio::runtime::Runtime::new()?;
    eprintln!("liminal: serving on http://{addr}");
    rt.block_on(liminal_service::serve(addr, manager))?;
    Ok(String::new())
}
