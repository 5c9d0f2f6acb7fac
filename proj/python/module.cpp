#include <pybind11/pybind11.h>
PYBIND11_MODULE(multitor, m) { m.doc() = "stub"; }
