//! Input parsing: defining data from TOML or JSON files.
