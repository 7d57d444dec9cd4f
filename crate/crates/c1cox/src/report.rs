//! Report rendering for the CLI.
