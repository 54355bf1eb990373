//! Library side of the `bicross` command: file formats, reports, SVG output
//! and the command implementations.

pub mod commands;
pub mod format;
pub mod report;
pub mod svg;

pub use commands::{cmd_census, cmd_decide, cmd_exact, CliError, Options, Outcome};
pub use format::{parse_edge_list, parse_graph, write_graph, InputFormat, ParseError};
pub use report::ReportDocument;
pub use svg::{render_svg, write_svg};
