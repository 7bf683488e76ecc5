//! Game sessions. Each session is an append-only log of moves; the state is
//! whatever replaying that log produces.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use liminal_core::solve::{Budget, GameState, LiminalRules, Move, Phase};
use liminal_core::{Graph, GraphSpec, VertexSet};
use serde::{Deserialize, Serialize};

use crate::engine::{Engine, EngineMode, Suggestion};
use crate::error::{Result, ServiceError};

/// Largest board the service accepts. Boards above the solver budget are
/// played by the greedy engine.
pub const MAX_SERVICE_VERTICES: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Arsonist,
    Saboteur,
    /// The engine plays both sides.
    Spectator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Arsonist,
    Saboteur,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Actor {
    Human,
    Engine,
    /// The only legal move, applied without asking either side.
    Forced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct LogHeader {
    id: String,
    spec: String,
    k: usize,
    role: Role,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogEntry {
    pub round: u32,
    pub side: Side,
    pub by: Actor,
    #[serde(rename = "move")]
    pub mv: Move,
}

/// What clients see.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SessionView {
    pub id: String,
    pub spec: String,
    pub k: usize,
    pub role: Role,
    pub engine: EngineMode,
    pub round: u32,
    pub phase: Phase,
    /// Side to act; absent once the game is over.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub to_move: Option<Side>,
    /// Vertices the saboteur must reveal this turn.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reveal_size: Option<usize>,
    pub burned: VertexSet,
    pub revealed: VertexSet,
    pub terminal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounds_total: Option<u32>,
    /// 1-based grid coordinates by vertex index, for strong products.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<Vec<usize>>>,
    pub history: Vec<LogEntry>,
}

fn side_to_move(state: &GameState) -> Side {
    match state.phase {
        Phase::SaboteurReveal => Side::Saboteur,
        Phase::ArsonistBurn => Side::Arsonist,
    }
}

#[derive(Debug)]
pub struct Session {
    id: String,
    spec: String,
    graph: Graph,
    rules: LiminalRules,
    role: Role,
    state: GameState,
    history: Vec<LogEntry>,
    engine: Engine,
    log: Option<PathBuf>,
}

impl Session {
    fn new(id: String, spec: &str, k: usize, role: Role, budget: &Budget, log: Option<PathBuf>) -> Result<Session> {
        let parsed: GraphSpec = spec.parse()?;
        let graph = parsed.build_with_budget(MAX_SERVICE_VERTICES)?;
        if k == 0 || k > graph.order() {
            return Err(ServiceError::Invalid(format!("k must be between 1 and {}, got {k}", graph.order())));
        }
        let rules = LiminalRules::new(k);
        let engine = Engine::new(&graph, rules, budget);
        Ok(Session {
            id,
            spec: parsed.to_string(),
            state: GameState::initial(&graph),
            graph,
            rules,
            role,
            history: Vec::new(),
            engine,
            log,
        })
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn history(&self) -> &[LogEntry] {
        &self.history
    }

    fn human_side(&self) -> Option<Side> {
        match self.role {
            Role::Arsonist => Some(Side::Arsonist),
            Role::Saboteur => Some(Side::Saboteur),
            Role::Spectator => None,
        }
    }

    fn record(&mut self, by: Actor, mv: Move) -> Result<()> {
        let next = self.rules.apply(&self.graph, &self.state, &mv)?;
        let entry = LogEntry { round: self.state.round, side: side_to_move(&self.state), by, mv };
        if let Some(path) = &self.log {
            append_line(path, &entry)?;
        }
        self.history.push(entry);
        self.state = next;
        Ok(())
    }

    /// Applies forced and engine moves until the human must act or the game ends.
    fn advance(&mut self) -> Result<()> {
        while !self.state.is_terminal() {
            if let Some(mv) = self.rules.forced_move(&self.state) {
                self.record(Actor::Forced, mv)?;
            } else if Some(side_to_move(&self.state)) != self.human_side() {
                let s = self.engine.suggest(&self.graph, &self.state)?;
                self.record(Actor::Engine, s.mv)?;
            } else {
                break;
            }
        }
        Ok(())
    }

    fn submit(&mut self, mv: Move) -> Result<()> {
        if self.state.is_terminal() {
            return Err(liminal_core::Error::GameOver.into());
        }
        if self.role == Role::Spectator {
            return Err(ServiceError::Invalid("spectator sessions take no moves".into()));
        }
        self.record(Actor::Human, mv)?;
        self.advance()
    }

    fn hint(&mut self) -> Result<Suggestion> {
        Ok(self.engine.suggest(&self.graph, &self.state)?)
    }

    /// Re-derives the state from the move history alone.
    pub fn replay(&self) -> Result<GameState> {
        let mut state = GameState::initial(&self.graph);
        for e in &self.history {
            state = self.rules.apply(&self.graph, &state, &e.mv)?;
        }
        Ok(state)
    }

    pub fn view(&self) -> SessionView {
        let terminal = self.state.is_terminal();
        let coords = self.graph.coords(0).is_some().then(|| {
            (0..self.graph.order()).map(|v| self.graph.coords(v).unwrap().coords).collect()
        });
        SessionView {
            id: self.id.clone(),
            spec: self.spec.clone(),
            k: self.rules.k,
            role: self.role,
            engine: self.engine.mode(),
            round: self.state.round,
            phase: self.state.phase,
            to_move: (!terminal).then(|| side_to_move(&self.state)),
            reveal_size: (!terminal && self.state.phase == Phase::SaboteurReveal)
                .then(|| self.rules.reveal_size(&self.state)),
            burned: self.state.burned.clone(),
            revealed: self.state.revealed.clone(),
            terminal,
            rounds_total: terminal.then_some(self.state.round),
            coords,
            history: self.history.clone(),
        }
    }
}

fn append_line<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    let mut line = serde_json::to_string(value).expect("log entries serialize");
    line.push('\n');
    f.write_all(line.as_bytes())?;
    Ok(())
}

/// All live sessions. Each session sits behind its own lock, so moves on one
/// session are serialized while distinct sessions proceed independently.
#[derive(Debug)]
pub struct SessionManager {
    dir: Option<PathBuf>,
    budget: Budget,
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
}

impl SessionManager {
    /// Sessions kept in memory only.
    pub fn in_memory() -> SessionManager {
        SessionManager { dir: None, budget: Budget::liminal(), sessions: RwLock::default() }
    }

    /// Sessions logged under `dir`; existing logs there are replayed.
    pub fn open(dir: impl Into<PathBuf>) -> Result<SessionManager> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        let manager = SessionManager { dir: Some(dir.clone()), budget: Budget::liminal(), sessions: RwLock::default() };
        let mut paths: Vec<PathBuf> = fs::read_dir(&dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "jsonl"))
            .collect();
        paths.sort();
        for p in paths {
            let session = manager.load(&p)?;
            manager.insert(session);
        }
        Ok(manager)
    }

    pub fn with_budget(mut self, budget: Budget) -> SessionManager {
        self.budget = budget;
        self
    }

    fn load(&self, path: &Path) -> Result<Session> {
        let corrupt = |line: usize, message: String| ServiceError::Corrupt { line, message };
        let mut lines = BufReader::new(File::open(path)?).lines();
        let header: LogHeader = match lines.next() {
            Some(l) => serde_json::from_str(&l?).map_err(|e| corrupt(1, e.to_string()))?,
            None => return Err(corrupt(1, "empty log".into())),
        };
        let mut session = Session::new(header.id, &header.spec, header.k, header.role, &self.budget, None)?;
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let entry: LogEntry = serde_json::from_str(&line).map_err(|e| corrupt(i + 2, e.to_string()))?;
            session.record(entry.by, entry.mv).map_err(|e| corrupt(i + 2, e.to_string()))?;
        }
        session.log = Some(path.to_path_buf());
        session.advance()?;
        Ok(session)
    }

    fn insert(&self, session: Session) {
        let id = session.id.clone();
        self.sessions.write().unwrap().insert(id, Arc::new(Mutex::new(session)));
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>> {
        self.sessions
            .read()
            .unwrap()
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::NotFound(id.to_string()))
    }

    pub fn create(&self, spec: &str, k: usize, role: Role) -> Result<SessionView> {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let log = self.dir.as_ref().map(|d| d.join(format!("{id}.jsonl")));
        let mut session = Session::new(id, spec, k, role, &self.budget, log)?;
        if let Some(path) = &session.log {
            let header = LogHeader { id: session.id.clone(), spec: session.spec.clone(), k, role };
            append_line(path, &header)?;
        }
        session.advance()?;
        let view = session.view();
        self.insert(session);
        Ok(view)
    }

    pub fn get(&self, id: &str) -> Result<SessionView> {
        Ok(self.session(id)?.lock().unwrap().view())
    }

    pub fn submit(&self, id: &str, mv: Move) -> Result<SessionView> {
        let s = self.session(id)?;
        let mut s = s.lock().unwrap();
        s.submit(mv)?;
        Ok(s.view())
    }

    pub fn hint(&self, id: &str) -> Result<Suggestion> {
        self.session(id)?.lock().unwrap().hint()
    }

    /// Runs `f` against the session under its lock.
    pub fn with_session<T>(&self, id: &str, f: impl FnOnce(&Session) -> T) -> Result<T> {
        Ok(f(&self.session(id)?.lock().unwrap()))
    }

    pub fn ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.sessions.read().unwrap().keys().cloned().collect();
        ids.sort();
        ids
    }
}
