use std::time::Duration;

use url::Url;

/// A failed request. `retryable` marks failures worth another attempt
/// (connection problems, timeouts, 5xx and 429 responses).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportError {
    pub message: String,
    pub retryable: bool,
}

impl std::fmt::Display for TransportError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

/// Issues HTTP GETs and returns the response body.
pub trait Transport: Send + Sync {
    fn get(&self, url: &Url) -> Result<String, TransportError>;
}

#[derive(Debug, Clone)]
pub struct HttpTransport {
    agent: ureq::Agent,
}

impl HttpTransport {
    pub fn new(timeout: Duration) -> Self {
        HttpTransport {
            agent: ureq::AgentBuilder::new()
                .timeout(timeout)
                .user_agent(concat!("emdat-wrangler/", env!("CARGO_PKG_VERSION")))
                .build(),
        }
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &Url) -> Result<String, TransportError> {
        match self.agent.request_url("GET", url).call() {
            Ok(resp) => resp.into_string().map_err(|e| TransportError {
                message: format!("reading body: {e}"),
                retryable: true,
            }),
            Err(ureq::Error::Status(code, resp)) => {
                let body = resp.into_string().unwrap_or_default();
                Err(TransportError {
                    message: format!("HTTP {code}: {}", body.chars().take(200).collect::<String>()),
                    retryable: code == 429 || code >= 500,
                })
            }
            Err(e) => Err(TransportError {
                message: e.to_string(),
                retryable: true,
            }),
        }
    }
}
