//! Text embeddings for the Well-Defined metric.
//!
//! Two providers sit behind [`Embedder`]: a deterministic hashed
//! bag-of-tokens model that needs no weights ([`LocalEmbedder`]) and an
//! HTTP client for a sentence-embedding service ([`RemoteEmbedder`]).
//!
//! The remote wire format is a JSON POST of `{"inputs": [...]}` answered by
//! `{"embeddings": [[...], ...]}`, one row per input.

mod local;
mod remote;

use std::fmt;
use std::time::Duration;

pub use local::{local_embed, local_embed_truncated, LocalEmbedder, LOCAL_DIMENSION};
pub use remote::RemoteEmbedder;

pub const ENV_EMBED_URL: &str = "WISEOWL_EMBED_URL";
pub const ENV_EMBED_TOKEN: &str = "WISEOWL_EMBED_TOKEN";

#[derive(Debug, thiserror::Error)]
pub enum EmbedError {
    #[error("embedding service unavailable: {0}")]
    RemoteUnavailable(String),
    #[error("embedding dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no texts to embed")]
    EmptyInput,
    #[error("malformed embedding response: {0}")]
    BadResponse(String),
    #[error("invalid embedding configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingVector(Vec<f64>);

impl EmbeddingVector {
    /// # Panics
    ///
    /// Panics on an empty value list; every vector has dimension ≥ 1.
    pub fn new(values: Vec<f64>) -> Self {
        assert!(!values.is_empty(), "embedding vectors have dimension ≥ 1");
        Self(values)
    }

    pub fn zeros(dimension: usize) -> Self {
        Self::new(vec![0.0; dimension])
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Cosine similarity, taken as 0 when either vector is zero.
pub fn cosine(u: &EmbeddingVector, v: &EmbeddingVector) -> Result<f64, EmbedError> {
    if u.dimension() != v.dimension() {
        return Err(EmbedError::DimensionMismatch {
            expected: u.dimension(),
            found: v.dimension(),
        });
    }
    let (nu, nv) = (u.norm(), v.norm());
    if nu == 0.0 || nv == 0.0 {
        return Ok(0.0);
    }
    let dot: f64 = u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum();
    Ok((dot / (nu * nv)).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provider {
    Local,
    Remote,
}

impl std::str::FromStr for Provider {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "local" => Ok(Provider::Local),
            "remote" => Ok(Provider::Remote),
            other => Err(format!("unknown embedder {other:?}; expected local or remote")),
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct EmbedConfig {
    pub provider: Provider,
    pub endpoint: Option<String>,
    pub batch_size: usize,
    pub max_tokens: usize,
    pub timeout: Duration,
    pub auth_token: Option<String>,
    /// Remote requests allowed in flight at once.
    pub parallelism: usize,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        Self {
            provider: Provider::Local,
            endpoint: None,
            batch_size: 64,
            max_tokens: 128,
            timeout: Duration::from_secs(60),
            auth_token: None,
            parallelism: 4,
        }
    }
}

impl fmt::Debug for EmbedConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EmbedConfig")
            .field("provider", &self.provider)
            .field("endpoint", &self.endpoint)
            .field("batch_size", &self.batch_size)
            .field("max_tokens", &self.max_tokens)
            .field("timeout", &self.timeout)
            .field("auth_token", &self.auth_token.as_ref().map(|_| "<redacted>"))
            .field("parallelism", &self.parallelism)
            .finish()
    }
}

impl EmbedConfig {
    pub fn remote(endpoint: impl Into<String>) -> Self {
        Self {
            provider: Provider::Remote,
            endpoint: Some(endpoint.into()),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), EmbedError> {
        if self.batch_size < 1 {
            return Err(EmbedError::Config("batch size must be at least 1".into()));
        }
        if self.max_tokens < 8 {
            return Err(EmbedError::Config("max tokens must be at least 8".into()));
        }
        if self.parallelism < 1 {
            return Err(EmbedError::Config("parallelism must be at least 1".into()));
        }
        match (self.provider, &self.endpoint) {
            (Provider::Remote, None) => Err(EmbedError::Config(format!(
                "the remote embedder needs an endpoint (--embed-url or {ENV_EMBED_URL})"
            ))),
            (Provider::Local, Some(_)) => Err(EmbedError::Config(
                "an endpoint was given but the embedder is local".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// A text-embedding provider. Implementations must return one vector per
/// input, in input order, all of one dimension.
pub trait Embedder: Send + Sync {
    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError>;

    /// Short description for report provenance.
    fn describe(&self) -> String;
}

pub fn embedder_from_config(config: &EmbedConfig) -> Result<Box<dyn Embedder>, EmbedError> {
    config.validate()?;
    Ok(match config.provider {
        Provider::Local => Box::new(LocalEmbedder::new(config.max_tokens)),
        Provider::Remote => Box::new(RemoteEmbedder::new(config)?),
    })
}

/// Embeds `texts` with the provider described by `config`.
pub fn embed_batch(texts: &[String], config: &EmbedConfig) -> Result<Vec<EmbeddingVector>, EmbedError> {
    embedder_from_config(config)?.embed_batch(texts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosine_conventions() {
        let v = EmbeddingVector::new(vec![0.3, -0.4, 1.2]);
        assert!((cosine(&v, &v).unwrap() - 1.0).abs() < 1e-12);
        let x = EmbeddingVector::new(vec![1.0, 0.0]);
        let y = EmbeddingVector::new(vec![0.0, 1.0]);
        assert_eq!(cosine(&x, &y).unwrap(), 0.0);
        assert_eq!(cosine(&EmbeddingVector::zeros(3), &v).unwrap(), 0.0);
        assert!(matches!(
            cosine(&x, &v),
            Err(EmbedError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn config_validation() {
        assert!(EmbedConfig::default().validate().is_ok());
        assert!(EmbedConfig::remote("http://localhost:1").validate().is_ok());
        let missing = EmbedConfig {
            provider: Provider::Remote,
            ..EmbedConfig::default()
        };
        assert!(matches!(missing.validate(), Err(EmbedError::Config(_))));
        let tiny = EmbedConfig {
            max_tokens: 4,
            ..EmbedConfig::default()
        };
        assert!(tiny.validate().is_err());
        let zero = EmbedConfig {
            batch_size: 0,
            ..EmbedConfig::default()
        };
        assert!(zero.validate().is_err());
    }

    #[test]
    fn debug_redacts_token() {
        let cfg = EmbedConfig {
            auth_token: Some("s3cret".into()),
            ..EmbedConfig::remote("http://x")
        };
        let shown = format!("{cfg:?}");
        assert!(!shown.contains("s3cret"));
        assert!(shown.contains("redacted"));
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(
            embed_batch(&[], &EmbedConfig::default()),
            Err(EmbedError::EmptyInput)
        ));
    }
}
