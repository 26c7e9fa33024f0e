//! Command-line front end: expression parsing, subcommand dispatch, and
//! stable text/JSON reports.

pub mod commands;
pub mod parse;
pub mod report;

pub use commands::run;
pub use parse::{parse_factored_product, parse_poly, parse_product_form, ParseError};
pub use report::Report;
