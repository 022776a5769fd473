//! Remote embedder against an in-process HTTP server.

use std::io::{BufRead, BufReader, Read, Write};
use std::net::{TcpListener, TcpStream};
use std::path::Path;
use std::sync::{Arc, Mutex};
use std::thread;

use wiseowl_core::embedding::{embed_batch, EmbedConfig, EmbedError, Embedder, RemoteEmbedder};
use wiseowl_core::report::{evaluate, evaluate_with};
use wiseowl_core::{ReportError, RunConfig};

#[derive(Clone, Copy)]
enum Mode {
    /// `[index, 1.0]` per input, where the input text is the index.
    Echo,
    Status500,
    WrongCount,
    RaggedRows,
}

#[derive(Default)]
struct Seen {
    requests: usize,
    batch_sizes: Vec<usize>,
    auth: Vec<Option<String>>,
}

struct MockServer {
    url: String,
    seen: Arc<Mutex<Seen>>,
}

fn respond(stream: &mut TcpStream, status: &str, body: &str) {
    let _ = write!(
        stream,
        "HTTP/1.1 {status}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: keep-alive\r\n\r\n{body}",
        body.len()
    );
}

fn serve(stream: TcpStream, mode: Mode, seen: Arc<Mutex<Seen>>) {
    let mut writer = stream.try_clone().unwrap();
    let mut reader = BufReader::new(stream);
    loop {
        let mut line = String::new();
        if reader.read_line(&mut line).unwrap_or(0) == 0 {
            return;
        }
        let mut length = 0;
        let mut auth = None;
        loop {
            let mut header = String::new();
            reader.read_line(&mut header).unwrap();
            let header = header.trim_end();
            if header.is_empty() {
                break;
            }
            let (name, value) = header.split_once(':').unwrap();
            match name.to_ascii_lowercase().as_str() {
                "content-length" => length = value.trim().parse().unwrap(),
                "authorization" => auth = Some(value.trim().to_string()),
                _ => {}
            }
        }
        let mut body = vec![0; length];
        reader.read_exact(&mut body).unwrap();
        let request: serde_json::Value = serde_json::from_slice(&body).unwrap();
        let inputs: Vec<String> = request["inputs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        {
            let mut s = seen.lock().unwrap();
            s.requests += 1;
            s.batch_sizes.push(inputs.len());
            s.auth.push(auth);
        }
        let rows: Vec<Vec<f64>> = inputs
            .iter()
            .enumerate()
            .map(|(i, text)| {
                let x = text.parse::<f64>().unwrap_or(text.len() as f64);
                match mode {
                    Mode::RaggedRows if i == 1 => vec![x],
                    _ => vec![x, 1.0],
                }
            })
            .collect();
        match mode {
            Mode::Status500 => respond(&mut writer, "500 Internal Server Error", "{}"),
            Mode::WrongCount => respond(
                &mut writer,
                "200 OK",
                &serde_json::json!({ "embeddings": &rows[..rows.len() - 1] }).to_string(),
            ),
            Mode::Echo | Mode::RaggedRows => respond(
                &mut writer,
                "200 OK",
                &serde_json::json!({ "embeddings": rows }).to_string(),
            ),
        }
    }
}

fn start(mode: Mode) -> MockServer {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/embed", listener.local_addr().unwrap());
    let seen = Arc::new(Mutex::new(Seen::default()));
    let shared = Arc::clone(&seen);
    thread::spawn(move || {
        for stream in listener.incoming() {
            let Ok(stream) = stream else { return };
            let seen = Arc::clone(&shared);
            thread::spawn(move || serve(stream, mode, seen));
        }
    });
    MockServer { url, seen }
}

fn texts(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

#[test]
fn batches_of_64_take_three_requests_in_order() {
    let server = start(Mode::Echo);
    let config = EmbedConfig {
        auth_token: Some("t0ken".into()),
        ..EmbedConfig::remote(&server.url)
    };
    let out = embed_batch(&texts(130), &config).unwrap();
    assert_eq!(out.len(), 130);
    for (i, v) in out.iter().enumerate() {
        assert_eq!(v.values(), &[i as f64, 1.0]);
    }
    let seen = server.seen.lock().unwrap();
    assert_eq!(seen.requests, 3);
    let mut sizes = seen.batch_sizes.clone();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 64, 64]);
    assert!(seen.auth.iter().all(|a| a.as_deref() == Some("Bearer t0ken")));
}

#[test]
fn no_token_sends_no_authorization() {
    let server = start(Mode::Echo);
    let config = EmbedConfig {
        parallelism: 1,
        ..EmbedConfig::remote(&server.url)
    };
    embed_batch(&texts(3), &config).unwrap();
    assert_eq!(server.seen.lock().unwrap().auth, vec![None]);
}

#[test]
fn http_errors_are_unavailable() {
    let server = start(Mode::Status500);
    let err = embed_batch(&texts(5), &EmbedConfig::remote(&server.url)).unwrap_err();
    assert!(matches!(err, EmbedError::RemoteUnavailable(_)), "{err}");
}

#[test]
fn refused_connection_is_unavailable() {
    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let err = embed_batch(&texts(2), &EmbedConfig::remote(format!("http://127.0.0.1:{port}/"))).unwrap_err();
    assert!(matches!(err, EmbedError::RemoteUnavailable(_)), "{err}");
}

#[test]
fn short_and_ragged_responses_are_rejected() {
    let server = start(Mode::WrongCount);
    let err = embed_batch(&texts(4), &EmbedConfig::remote(&server.url)).unwrap_err();
    assert!(matches!(err, EmbedError::BadResponse(_)), "{err}");

    let server = start(Mode::RaggedRows);
    let err = embed_batch(&texts(4), &EmbedConfig::remote(&server.url)).unwrap_err();
    assert!(matches!(err, EmbedError::DimensionMismatch { expected: 2, found: 1 }), "{err}");
}

#[test]
fn describe_names_the_endpoint() {
    let e = RemoteEmbedder::new(&EmbedConfig::remote("http://localhost:9/x")).unwrap();
    assert!(e.describe().contains("http://localhost:9/x"));
}

fn golden() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/golden.ttl"))
}

#[test]
fn evaluate_with_remote_provider() {
    let server = start(Mode::Echo);
    let config = RunConfig {
        inputs: vec![golden().to_path_buf()],
        embed: EmbedConfig::remote(&server.url),
        ..RunConfig::default()
    };
    let report = evaluate(golden(), &config).unwrap();
    report.verify().unwrap();
    assert!(!report.define.skipped);
    assert_eq!(report.define.defined_count, 16);
    assert!(server.seen.lock().unwrap().requests >= 1);
}

#[test]
fn unreachable_provider_fails_the_define_stage() {
    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let config = RunConfig {
        inputs: vec![golden().to_path_buf()],
        embed: EmbedConfig::remote(format!("http://127.0.0.1:{port}/")),
        ..RunConfig::default()
    };
    let err = evaluate(golden(), &config).unwrap_err();
    assert!(matches!(err, ReportError::Embed { .. }));
    assert_eq!(err.exit_code(), 3);
    assert!(err.to_string().contains("define stage"));

    // Without an embedder the same file scores fine.
    let report = evaluate_with(golden(), &config, None).unwrap();
    assert!(report.define.skipped);
}
