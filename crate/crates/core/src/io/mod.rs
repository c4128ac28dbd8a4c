//! The line-oriented structure format and report rendering.

mod format;
mod report;

pub use format::{parse, serialize, Document, ParseError, Structure};
pub use report::{render_json, render_text, ReportOptions};
