// Copyright 2026 The lynbwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

int main(int argc, char** argv) { return lynbwt::cli::run(argc, argv); }
