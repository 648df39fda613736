// Copyright 2026 The magnomech Contributors
// SPDX-License-Identifier: Apache-2.0

use clap::Parser;
use magnomech::cli::{main_with, Cli};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    std::process::exit(main_with(Cli::parse()));
}
