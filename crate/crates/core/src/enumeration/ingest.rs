//! Reading headerless graph6 streams.

use std::io::BufRead;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Graph6Error;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorPolicy {
    /// Log the bad line and continue.
    #[default]
    Skip,
    /// Yield the error and stop.
    Abort,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IngestError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("line {line}: read failed: {message}")]
    Io { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IngestOptions {
    pub policy: ErrorPolicy,
    pub connected_only: bool,
}

/// Iterator over the graphs of a graph6 stream. Blank lines are ignored.
pub struct Ingest<R> {
    lines: std::io::Lines<R>,
    line: usize,
    options: IngestOptions,
    done: bool,
    /// Errors skipped under [`ErrorPolicy::Skip`].
    pub skipped: Vec<IngestError>,
    /// Disconnected graphs dropped by the connectivity filter.
    pub filtered: usize,
}

pub fn ingest_graph6<R: BufRead>(reader: R, options: IngestOptions) -> Ingest<R> {
    Ingest { lines: reader.lines(), line: 0, options, done: false, skipped: Vec::new(), filtered: 0 }
}

impl<R: BufRead> Iterator for Ingest<R> {
    type Item = Result<Graph, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let text = self.lines.next()?;
            self.line += 1;
            let parsed = match text {
                Err(e) => Err(IngestError::Io { line: self.line, message: e.to_string() }),
                Ok(t) if t.trim().is_empty() => continue,
                Ok(t) => parse_graph6(t.trim()).map_err(|source| IngestError::Parse { line: self.line, source }),
            };
            match parsed {
                Ok(g) if self.options.connected_only && !g.is_connected() => self.filtered += 1,
                Ok(g) => return Some(Ok(g)),
                Err(e) => match self.options.policy {
                    ErrorPolicy::Skip => {
                        log::warn!("skipping {e}");
                        self.skipped.push(e);
                    }
                    ErrorPolicy::Abort => {
                        self.done = true;
                        return Some(Err(e));
                    }
                },
            }
        }
        None
    }
}
