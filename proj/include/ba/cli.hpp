#pragma once

namespace ba {

int run_cli(int argc, char** argv);

}  // namespace ba
