//! Front end for the `btchow` engine: problem files, reports and the
//! `btchow` command.

pub mod app;
pub mod error;
pub mod problem;
pub mod report;

pub use app::{execute, render_table, run, Args, Format, Settings};
pub use error::CliError;
pub use problem::{parse_problem, parse_problem_str, DegreeRange, ProblemFile, Task, TaskList};
pub use report::ReportFile;
