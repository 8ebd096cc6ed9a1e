#include "coh/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace coh {

ComplexMatrix read_state_matrix(std::istream& in) {
    int d = 0;
    if (!(in >> d)) throw ParseError("state file: missing dimension on line 1");
    if (d < 1 || d > 64) throw ParseError("state file: dimension out of range [1, 64]");
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw ParseError("state file: expected " + std::to_string(d * d) +
                                 " entries, ran out at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            double re = 0.0, im = 0.0;
            char tail = '\0';
            if (std::sscanf(tok.c_str(), "%lf,%lf%c", &re, &im, &tail) != 2)
                throw ParseError("state file: bad entry '" + tok + "', expected re,im");
            m(i, j) = Complex(re, im);
        }
    return m;
}

ComplexMatrix read_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open state file: " + path);
    return read_state_matrix(f);
}

void write_state_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.dim() << "\n";
    char buf[64];
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(i, j).real(), m(i, j).imag());
            out << (j ? " " : "") << buf;
        }
        out << "\n";
    }
}

void write_state_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open for writing: " + path);
    write_state_matrix(f, m);
}

DensityMatrix load_density(const std::string& path, double tol) {
    const ComplexMatrix m = read_state_file(path);
    return DensityMatrix(m, ValidationTol{tol, tol, tol});
}

}  // namespace coh
