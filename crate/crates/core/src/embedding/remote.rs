use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::{EmbedConfig, EmbedError, Embedder, EmbeddingVector};

#[derive(Serialize)]
struct EmbedRequest<'a> {
    inputs: &'a [String],
}

#[derive(Deserialize)]
struct EmbedResponse {
    embeddings: Vec<Vec<f64>>,
}

/// Client for an HTTP sentence-embedding service.
///
/// Texts go out in chunks of `batch_size`; up to `parallelism` chunks are in
/// flight at once. Results are reassembled in input order.
pub struct RemoteEmbedder {
    agent: ureq::Agent,
    endpoint: String,
    auth_token: Option<String>,
    batch_size: usize,
    parallelism: usize,
}

impl std::fmt::Debug for RemoteEmbedder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RemoteEmbedder")
            .field("endpoint", &self.endpoint)
            .field("batch_size", &self.batch_size)
            .field("parallelism", &self.parallelism)
            .finish_non_exhaustive()
    }
}

impl RemoteEmbedder {
    pub fn new(config: &EmbedConfig) -> Result<Self, EmbedError> {
        let endpoint = config
            .endpoint
            .clone()
            .ok_or_else(|| EmbedError::Config("remote embedder without endpoint".into()))?;
        let agent = ureq::AgentBuilder::new().timeout(config.timeout).build();
        Ok(Self {
            agent,
            endpoint,
            auth_token: config.auth_token.clone(),
            batch_size: config.batch_size.max(1),
            parallelism: config.parallelism.max(1),
        })
    }

    fn post_chunk(&self, chunk: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
        let mut request = self.agent.post(&self.endpoint);
        if let Some(token) = &self.auth_token {
            request = request.set("Authorization", &format!("Bearer {token}"));
        }
        let response = request
            .send_json(EmbedRequest { inputs: chunk })
            .map_err(|e| match e {
                ureq::Error::Status(code, resp) => EmbedError::RemoteUnavailable(format!(
                    "{} returned HTTP {code} {}",
                    self.endpoint,
                    resp.status_text()
                )),
                ureq::Error::Transport(t) => {
                    EmbedError::RemoteUnavailable(format!("{}: {t}", self.endpoint))
                }
            })?;
        let body: EmbedResponse = response
            .into_json()
            .map_err(|e| EmbedError::BadResponse(e.to_string()))?;
        if body.embeddings.len() != chunk.len() {
            return Err(EmbedError::BadResponse(format!(
                "sent {} inputs, received {} embeddings",
                chunk.len(),
                body.embeddings.len()
            )));
        }
        let dim = body.embeddings.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(EmbedError::BadResponse("empty embedding row".into()));
        }
        body.embeddings
            .into_iter()
            .map(|row| {
                if row.len() == dim {
                    Ok(EmbeddingVector::new(row))
                } else {
                    Err(EmbedError::DimensionMismatch {
                        expected: dim,
                        found: row.len(),
                    })
                }
            })
            .collect()
    }
}

impl Embedder for RemoteEmbedder {
    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
        if texts.is_empty() {
            return Err(EmbedError::EmptyInput);
        }
        let chunks: Vec<&[String]> = texts.chunks(self.batch_size).collect();
        let slots: Mutex<Vec<Option<Result<Vec<EmbeddingVector>, EmbedError>>>> =
            Mutex::new((0..chunks.len()).map(|_| None).collect());
        let next = AtomicUsize::new(0);
        let workers = self.parallelism.min(chunks.len());
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(chunk) = chunks.get(i) else { break };
                    let result = self.post_chunk(chunk);
                    let failed = result.is_err();
                    slots.lock().expect("no worker panics while holding the lock")[i] = Some(result);
                    if failed {
                        // Park the counter past the end so other workers stop.
                        next.store(chunks.len(), Ordering::Relaxed);
                        break;
                    }
                });
            }
        });

        let mut out = Vec::with_capacity(texts.len());
        let mut dim = None;
        for slot in slots.into_inner().expect("workers joined") {
            let Some(result) = slot else {
                // Skipped after an earlier failure; that error is reported below.
                continue;
            };
            for v in result? {
                match dim {
                    None => dim = Some(v.dimension()),
                    Some(d) if d != v.dimension() => {
                        return Err(EmbedError::DimensionMismatch {
                            expected: d,
                            found: v.dimension(),
                        })
                    }
                    _ => {}
                }
                out.push(v);
            }
        }
        if out.len() != texts.len() {
            return Err(EmbedError::RemoteUnavailable(
                "embedding requests were abandoned after a failure".into(),
            ));
        }
        Ok(out)
    }

    fn describe(&self) -> String {
        format!("remote {} (batch {})", self.endpoint, self.batch_size)
    }
}
