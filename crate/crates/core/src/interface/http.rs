//! JSON-over-HTTP service.
//!
//! | method | path | body / query | response |
//! |--------|------|--------------|----------|
//! | GET  | `/kb` | | knowledge-base document |
//! | GET  | `/kb/terms` | | term -> linked procedures |
//! | POST | `/kb/terms` | `{term, procedure, level}` | 201, the term's variable |
//! | GET  | `/similarity` | `?a=&b=` | similarity report |
//! | GET  | `/partition` | `?theta=` | partition |
//! | POST | `/diagnose` | query | session |
//! | GET  | `/sessions/{id}` | | session |
//! | POST | `/sessions/{id}/confirm` | `{candidate, eta?}` | session |
//! | POST | `/sessions/{id}/reject` | `{candidate, eta?}` | session |
//!
//! Bodies are rendered canonically, so a similarity report is
//! byte-identical to `fuzzynet sim --json`.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, Query as QueryParams, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};

use super::{similarity_between, ApiError, FORMAT_VERSION_HEADER};
use crate::diagnosis::{Query, DEFAULT_LEARNING_RATE};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::fuzzy::InterpretationLevel;
use crate::kb::{to_canonical_string, FORMAT_VERSION};
use crate::similarity::{partition, DEFAULT_THETA};

type Shared = Arc<Engine>;

fn json_response<T: Serialize>(status: StatusCode, body: &T) -> Response {
    match to_canonical_string(body) {
        Ok(text) => (status, [(header::CONTENT_TYPE, "application/json")], text).into_response(),
        Err(e) => error_response(ApiError::from(e)),
    }
}

fn error_response(err: ApiError) -> Response {
    let status = StatusCode::from_u16(err.status()).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
    let text = serde_json::to_string(&err).unwrap_or_default();
    (status, [(header::CONTENT_TYPE, "application/json")], text).into_response()
}

struct Reply(Result<Response>);

impl IntoResponse for Reply {
    fn into_response(self) -> Response {
        match self.0 {
            Ok(r) => r,
            Err(e) => error_response(ApiError::from(e)),
        }
    }
}

fn ok<T: Serialize>(body: &T) -> Reply {
    Reply(Ok(json_response(StatusCode::OK, body)))
}

fn bad_body(rejection: JsonRejection) -> Reply {
    Reply(Ok(error_response(ApiError::new("malformed_body", rejection.body_text()))))
}

async fn get_kb(State(engine): State<Shared>) -> Reply {
    ok(&*engine.snapshot())
}

async fn get_terms(State(engine): State<Shared>) -> Reply {
    let kb = engine.snapshot();
    let terms: BTreeMap<&String, Vec<&str>> = kb
        .terms
        .iter()
        .map(|(t, var)| (t, var.procedures().map(|p| p.as_str()).collect()))
        .collect();
    ok(&terms)
}

#[derive(Deserialize)]
struct LearnRequest {
    term: String,
    procedure: String,
    level: InterpretationLevel,
}

async fn post_term(State(engine): State<Shared>, body: Result<Json<LearnRequest>, JsonRejection>) -> Reply {
    let Json(req) = match body {
        Ok(b) => b,
        Err(r) => return bad_body(r),
    };
    Reply(engine.learn(&req.term, &req.procedure, req.level).map(|()| {
        let kb = engine.snapshot();
        json_response(StatusCode::CREATED, &kb.terms[&req.term])
    }))
}

#[derive(Deserialize)]
struct SimilarityParams {
    a: String,
    b: String,
}

async fn get_similarity(
    State(engine): State<Shared>,
    params: Result<QueryParams<SimilarityParams>, axum::extract::rejection::QueryRejection>,
) -> Reply {
    let QueryParams(p) = match params {
        Ok(p) => p,
        Err(r) => return Reply(Ok(error_response(ApiError::new("malformed_query", r.body_text())))),
    };
    Reply(similarity_between(&engine.snapshot(), &p.a, &p.b).map(|r| json_response(StatusCode::OK, &r)))
}

#[derive(Deserialize)]
struct PartitionParams {
    theta: Option<f64>,
}

async fn get_partition(
    State(engine): State<Shared>,
    params: Result<QueryParams<PartitionParams>, axum::extract::rejection::QueryRejection>,
) -> Reply {
    let theta = match params {
        Ok(QueryParams(p)) => p.theta.unwrap_or(DEFAULT_THETA),
        Err(r) => return Reply(Ok(error_response(ApiError::new("malformed_query", r.body_text())))),
    };
    if !(0.0..=1.0).contains(&theta) {
        return Reply(Err(Error::degenerate(format!("theta {theta} outside [0, 1]"))));
    }
    Reply(
        engine
            .snapshot()
            .net()
            .map(|net| json_response(StatusCode::OK, &partition(&net, theta))),
    )
}

async fn post_diagnose(State(engine): State<Shared>, body: Result<Json<Query>, JsonRejection>) -> Reply {
    match body {
        Ok(Json(q)) => Reply(engine.diagnose(q).map(|s| json_response(StatusCode::OK, &s))),
        Err(r) => bad_body(r),
    }
}

fn parse_id(raw: &str) -> Result<u64> {
    raw.parse().map_err(|_| Error::unknown("session", raw))
}

async fn get_session(State(engine): State<Shared>, Path(id): Path<String>) -> Reply {
    Reply(parse_id(&id).and_then(|id| engine.session(id)).map(|s| json_response(StatusCode::OK, &s)))
}

#[derive(Deserialize)]
struct Decision {
    candidate: String,
    eta: Option<f64>,
}

async fn post_confirm(
    State(engine): State<Shared>,
    Path(id): Path<String>,
    body: Result<Json<Decision>, JsonRejection>,
) -> Reply {
    let Json(d) = match body {
        Ok(b) => b,
        Err(r) => return bad_body(r),
    };
    Reply(
        parse_id(&id)
            .and_then(|id| engine.confirm(id, &d.candidate, d.eta.unwrap_or(DEFAULT_LEARNING_RATE)))
            .map(|(s, _)| json_response(StatusCode::OK, &s)),
    )
}

async fn post_reject(
    State(engine): State<Shared>,
    Path(id): Path<String>,
    body: Result<Json<Decision>, JsonRejection>,
) -> Reply {
    let Json(d) = match body {
        Ok(b) => b,
        Err(r) => return bad_body(r),
    };
    Reply(
        parse_id(&id)
            .and_then(|id| engine.reject(id, &d.candidate, d.eta.unwrap_or(DEFAULT_LEARNING_RATE)))
            .map(|(s, _)| json_response(StatusCode::OK, &s)),
    )
}

async fn version_header(mut response: Response) -> Response {
    response.headers_mut().insert(
        FORMAT_VERSION_HEADER,
        HeaderValue::from_str(&FORMAT_VERSION.to_string()).expect("ascii digits"),
    );
    response
}

pub fn router(engine: Shared) -> Router {
    Router::new()
        .route("/kb", get(get_kb))
        .route("/kb/terms", get(get_terms).post(post_term))
        .route("/similarity", get(get_similarity))
        .route("/partition", get(get_partition))
        .route("/diagnose", post(post_diagnose))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/confirm", post(post_confirm))
        .route("/sessions/{id}/reject", post(post_reject))
        .layer(axum::middleware::map_response(version_header))
        .with_state(engine)
}

/// Serves until ctrl-c.
pub async fn serve(engine: Shared, addr: SocketAddr) -> Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(engine))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}
