//! JSON over HTTP.
//!
//! * `POST /sessions` with `{spec, k, role}` returns `{id, state}`.
//! * `GET /sessions/{id}` returns the state.
//! * `POST /sessions/{id}/move` with `{type, vertices}` returns the state after
//!   the move and every engine reply up to the human's next turn.
//! * `GET /sessions/{id}/hint` returns `{move, value, certified}`.
//!
//! Errors come back as `{"error": "..."}`.

use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use liminal_core::solve::Move;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::engine::Suggestion;
use crate::error::ServiceError;
use crate::session::{Role, SessionManager, SessionView};

#[derive(Debug, Deserialize)]
pub struct CreateRequest {
    pub spec: String,
    pub k: usize,
    pub role: Role,
}

#[derive(Debug, Serialize)]
pub struct Created {
    pub id: String,
    pub state: SessionView,
}

pub struct ApiError(StatusCode, String);

impl From<ServiceError> for ApiError {
    fn from(e: ServiceError) -> Self {
        use liminal_core::Error as E;
        let status = match &e {
            ServiceError::NotFound(_) => StatusCode::NOT_FOUND,
            ServiceError::Invalid(_) => StatusCode::BAD_REQUEST,
            ServiceError::Game(E::GameOver) => StatusCode::CONFLICT,
            ServiceError::Game(E::IllegalMove(_) | E::VertexOutOfRange { .. }) => StatusCode::UNPROCESSABLE_ENTITY,
            ServiceError::Game(E::Parse(_) | E::InvalidGraph(_) | E::SizeLimit { .. } | E::OutOfRange(_)) => {
                StatusCode::BAD_REQUEST
            }
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError(status, e.to_string())
    }
}

impl From<JsonRejection> for ApiError {
    fn from(r: JsonRejection) -> Self {
        ApiError(StatusCode::BAD_REQUEST, r.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

type Shared = State<Arc<SessionManager>>;

/// Engine replies can take a while, so manager calls run off the async workers.
async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> Result<T, ServiceError> + Send + 'static,
) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?
        .map_err(ApiError::from)
}

async fn create(State(m): Shared, body: Result<Json<CreateRequest>, JsonRejection>) -> Result<Response, ApiError> {
    let Json(req) = body?;
    let state = blocking(move || m.create(&req.spec, req.k, req.role)).await?;
    Ok((StatusCode::CREATED, Json(Created { id: state.id.clone(), state })).into_response())
}

async fn show(State(m): Shared, Path(id): Path<String>) -> Result<Json<SessionView>, ApiError> {
    Ok(Json(blocking(move || m.get(&id)).await?))
}

async fn submit(
    State(m): Shared,
    Path(id): Path<String>,
    body: Result<Json<Move>, JsonRejection>,
) -> Result<Json<SessionView>, ApiError> {
    let Json(mv) = body?;
    Ok(Json(blocking(move || m.submit(&id, mv)).await?))
}

async fn hint(State(m): Shared, Path(id): Path<String>) -> Result<Json<Suggestion>, ApiError> {
    Ok(Json(blocking(move || m.hint(&id)).await?))
}

pub fn router(manager: Arc<SessionManager>) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/move", post(submit))
        .route("/sessions/{id}/hint", get(hint))
        .with_state(manager)
}

/// Serves until the process is stopped.
pub async fn serve(addr: &str, manager: SessionManager) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(Arc::new(manager))).await
}
