use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use liminal_service::{router, SessionManager};
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &axum::Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = req.body(body.map_or(Body::empty(), |b| Body::from(b.to_string()))).unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

#[tokio::test]
async fn full_game_over_http() {
    let app = router(Arc::new(SessionManager::in_memory()));
    let (status, created) =
        call(&app, "POST", "/sessions", Some(json!({"spec": "path:n=6", "k": 2, "role": "saboteur"}))).await;
    assert_eq!(status, StatusCode::CREATED);
    let id = created["id"].as_str().unwrap().to_string();
    let state = &created["state"];
    assert_eq!(state["round"], 1);
    assert_eq!(state["phase"], "saboteur_reveal");
    assert_eq!(state["terminal"], false);
    assert_eq!(state["burned"], json!([]));
    assert!(state.get("rounds_total").is_none());

    let (status, hint) = call(&app, "GET", &format!("/sessions/{id}/hint"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(hint["certified"], true);
    assert_eq!(hint["move"]["type"], "reveal");

    let (status, err) =
        call(&app, "POST", &format!("/sessions/{id}/move"), Some(json!({"type": "reveal", "vertices": [0]}))).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert!(err["error"].as_str().unwrap().contains("exactly 2"));

    let (status, err) = call(&app, "POST", &format!("/sessions/{id}/move"), Some(json!({"type": "jump"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(err["error"].is_string());

    let mut state = call(&app, "GET", &format!("/sessions/{id}"), None).await.1;
    while state["terminal"] == false {
        let pool: Vec<u64> = (0..6u64)
            .filter(|v| !state["revealed"].as_array().unwrap().contains(&json!(v)))
            .filter(|v| !state["burned"].as_array().unwrap().contains(&json!(v)))
            .collect();
        let size = state["reveal_size"].as_u64().unwrap() as usize;
        let (status, next) = call(
            &app,
            "POST",
            &format!("/sessions/{id}/move"),
            Some(json!({"type": "reveal", "vertices": &pool[..size]})),
        )
        .await;
        assert_eq!(status, StatusCode::OK, "{next}");
        state = next;
    }
    assert!(state["rounds_total"].as_u64().unwrap() >= 3);

    let (status, _) = call(&app, "GET", &format!("/sessions/{id}/hint"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
}

#[tokio::test]
async fn errors_have_statuses() {
    let app = router(Arc::new(SessionManager::in_memory()));
    assert_eq!(call(&app, "GET", "/sessions/missing", None).await.0, StatusCode::NOT_FOUND);
    let bad_spec = json!({"spec": "path:n=x", "k": 1, "role": "arsonist"});
    assert_eq!(call(&app, "POST", "/sessions", Some(bad_spec)).await.0, StatusCode::BAD_REQUEST);
    let bad_role = json!({"spec": "path:n=3", "k": 1, "role": "referee"});
    assert_eq!(call(&app, "POST", "/sessions", Some(bad_role)).await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn strong_product_states_carry_coordinates() {
    let app = router(Arc::new(SessionManager::in_memory()));
    let body = json!({"spec": "strongpath:n=3,d=2", "k": 2, "role": "arsonist"});
    let (_, created) = call(&app, "POST", "/sessions", Some(body)).await;
    let coords = created["state"]["coords"].as_array().unwrap();
    assert_eq!(coords.len(), 9);
    assert_eq!(coords[4], json!([2, 2]));
    assert_eq!(created["state"]["phase"], "arsonist_burn");
}
