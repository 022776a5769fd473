use super::{EmbedError, Embedder, EmbeddingVector};
use crate::text::tokenize;

pub const LOCAL_DIMENSION: usize = 256;

const SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// FNV-1a over the token bytes, seeded, then a splitmix64 finalizer so the
/// bucket and sign bits are well mixed.
fn token_hash(token: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ SEED;
    for b in token.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^= h >> 30;
    h = h.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h ^= h >> 27;
    h = h.wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

/// Signed feature hashing of the token bag, L2-normalized. Text without
/// tokens maps to the zero vector.
pub fn local_embed(text: &str) -> EmbeddingVector {
    embed_tokens(&tokenize(text))
}

/// [`local_embed`] over the first `max_tokens` tokens only.
pub fn local_embed_truncated(text: &str, max_tokens: usize) -> EmbeddingVector {
    let mut tokens = tokenize(text);
    tokens.truncate(max_tokens);
    embed_tokens(&tokens)
}

fn embed_tokens(tokens: &[String]) -> EmbeddingVector {
    let mut values = vec![0.0f64; LOCAL_DIMENSION];
    for token in tokens {
        let h = token_hash(token);
        let bucket = (h % LOCAL_DIMENSION as u64) as usize;
        values[bucket] += if h >> 63 == 1 { -1.0 } else { 1.0 };
    }
    let norm = values.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        values.iter_mut().for_each(|x| *x /= norm);
    }
    EmbeddingVector::new(values)
}

/// Deterministic, weight-free embedder used by default and in tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalEmbedder {
    max_tokens: usize,
}

impl LocalEmbedder {
    pub fn new(max_tokens: usize) -> Self {
        Self { max_tokens }
    }
}

impl Default for LocalEmbedder {
    fn default() -> Self {
        Self::new(128)
    }
}

impl Embedder for LocalEmbedder {
    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>, EmbedError> {
        if texts.is_empty() {
            return Err(EmbedError::EmptyInput);
        }
        Ok(texts
            .iter()
            .map(|t| local_embed_truncated(t, self.max_tokens))
            .collect())
    }

    fn describe(&self) -> String {
        format!("local hashed bag-of-tokens ({LOCAL_DIMENSION}-d, max {} tokens)", self.max_tokens)
    }
}
