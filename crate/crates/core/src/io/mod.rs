//! Exact text serialization, dump import and command reports.

mod dump;
mod format;
mod report;

pub use dump::{import_dump, parse_dump, DumpEntries, KeyLayout};
pub use format::{load, load_ring, save, save_ring, SystemFile};
pub use report::{Finding, Report, Status};
