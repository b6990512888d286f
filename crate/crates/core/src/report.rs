//! Machine-readable reports emitted by the command-line interface.
//!
//! Reports are deterministic: identical input bytes, seed and tolerance
//! produce identical report bytes. JSON objects are serialized with sorted
//! keys and no volatile fields (paths, timestamps).

use sha2::{Digest, Sha256};

/// Exit-code contract shared by all commands.
pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, serde::Serialize)]
pub struct Report {
    /// The subcommand and its significant arguments.
    pub command: String,
    /// SHA-256 of the input file bytes, when a file was read.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tol: f64,
    /// Per-command payload; serialized with sorted keys.
    pub results: serde_json::Value,
    pub status: String,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: String, tol: f64) -> Report {
        Report {
            command,
            input_digest: None,
            seed: None,
            tol,
            results: serde_json::Value::Null,
            status: "ok".into(),
            exit_code: EXIT_OK,
        }
    }

    pub fn with_digest(mut self, input: &[u8]) -> Report {
        self.input_digest = Some(sha256_hex(input));
        self
    }

    pub fn fail_assertion(&mut self) {
        self.status = "assertion-failed".into();
        self.exit_code = EXIT_ASSERTION_FAILED;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}
