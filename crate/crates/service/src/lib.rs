//! Interactive k-liminal burning: a human plays arsonist or saboteur, the
//! engine plays the other side.
//!
//! The saboteur must reveal `min(k, r)` vertices each turn, where `r` counts
//! the vertices that are neither revealed nor burned; with fewer than `k`
//! left, all of them are revealed. The arsonist may pass only when no
//! revealed vertex is unburned. Moves with a single legal option are applied
//! automatically.

pub mod engine;
pub mod error;
pub mod http;
pub mod session;

pub use engine::{Engine, EngineMode, Suggestion};
pub use error::{Result, ServiceError};
pub use http::{router, serve};
pub use session::{Actor, LogEntry, Role, Session, SessionManager, SessionView, Side, MAX_SERVICE_VERTICES};
