//! Deterministic JSON run reports.
//!
//! Every command prints exactly one JSON document to stdout with a fixed
//! field order, so identical inputs produce byte-identical reports.

use serde::Serialize;

/// The numeric constants the audits are pinned to, echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct Constants {
    /// Largest marked-vertex distance still carrying weight 1.
    pub weight_one_distance: u32,
    /// Largest marked-vertex distance still carrying weight 1/3.
    pub weight_third_distance: u32,
    /// Edge weight bound per rank, as an exact rational.
    pub edge_bound_per_rank: &'static str,
    /// Scale and offset of the general dimension bound `96 C + 68`.
    pub general_bound_scale: u32,
    pub general_bound_offset: u32,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            weight_one_distance: 7,
            weight_third_distance: 15,
            edge_bound_per_rank: "29/3",
            general_bound_scale: 96,
            general_bound_offset: 68,
        }
    }
}

/// Envelope of a command run.
#[derive(Debug, Serialize)]
pub struct RunReport<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub input_digests: Vec<String>,
    pub constants: Constants,
    pub pass: bool,
    pub results: T,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl<T: Serialize> RunReport<T> {
    pub fn new(command: String, pass: bool, results: T) -> Self {
        RunReport {
            tool: "coxkit",
            version: env!("CARGO_PKG_VERSION"),
            command,
            input_digests: Vec::new(),
            constants: Constants::default(),
            pass,
            results,
            notes: Vec::new(),
        }
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("report serializes")
        );
    }
}

/// FNV-1a digest of raw input bytes, hex-encoded.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("fnv1a:{h:016x}")
}
