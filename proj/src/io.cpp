#include "perfectlike/io.hpp"

#include <fstream>
#include <sstream>

namespace perfectlike {

namespace {

struct LineReader {
    std::istream& in;
    int lineno = 0;
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (line[0] == '#') continue;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("line " + std::to_string(lineno) + ": " + what);
    }
};

int parse_header(LineReader& r, std::string& line, const char* key) {
    std::istringstream ss(line);
    std::string k;
    long long v;
    if (!(ss >> k >> v) || k != key) r.fail(std::string("expected '") + key + " <int>'");
    return int(v);
}

Word parse_word(LineReader& r, const std::string& line, int q, int n) {
    std::istringstream ss(line);
    std::vector<int> sym;
    long long v;
    while (ss >> v) {
        if (v < 0 || v >= q) r.fail("symbol " + std::to_string(v) + " out of range for q");
        sym.push_back(int(v));
    }
    std::string rest;
    if (ss.clear(), ss >> rest) r.fail("trailing garbage on word line");
    if (int(sym.size()) != n) r.fail("ragged row: expected " + std::to_string(n) + " symbols");
    return Word::from_symbols(q, sym);
}

void read_headers(LineReader& r, int& q, int& n) {
    std::string line;
    if (!r.next(line)) r.fail("missing 'q' header");
    q = parse_header(r, line, "q");
    if (!r.next(line)) r.fail("missing 'n' header");
    n = parse_header(r, line, "n");
    if (q < 2 || q > 9) r.fail("unsupported alphabet size");
    if (n < 0 || n > Word::max_length(q)) r.fail("unsupported word length");
}

} // namespace

Code read_code(std::istream& in) {
    LineReader r{in};
    int q, n;
    read_headers(r, q, n);
    std::vector<Word> words;
    std::string line;
    while (r.next(line)) words.push_back(parse_word(r, line, q, n));
    return Code(q, n, std::move(words));
}

void write_code(std::ostream& out, const Code& c) {
    out << "q " << c.q() << "\n" << "n " << c.n() << "\n";
    for (const Word& w : c.words()) out << w.str() << "\n";
}

Partition read_partition(std::istream& in) {
    LineReader r{in};
    int q, n;
    read_headers(r, q, n);
    Partition p;
    p.q = q;
    p.n = n;
    std::string line;
    std::vector<Word> cur;
    bool started = false;
    auto flush = [&] {
        if (!started) return;
        p.classes.emplace_back(q, n, std::move(cur));
        cur = {};
    };
    while (r.next(line)) {
        if (line.rfind("class", 0) == 0 &&
            (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
            flush();
            started = true;
            std::istringstream ss(line);
            std::string k, label;
            ss >> k >> label;
            p.labels.push_back(label);
            continue;
        }
        if (!started) r.fail("word before first 'class' line");
        cur.push_back(parse_word(r, line, q, n));
    }
    flush();
    if (p.classes.empty()) r.fail("partition has no classes");
    try {
        p.validate();
    } catch (const semantics_error& e) {
        throw parse_error(std::string("invalid partition: ") + e.what());
    }
    return p;
}

void write_partition(std::ostream& out, const Partition& p) {
    out << "q " << p.q << "\n" << "n " << p.n << "\n";
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        out << "class " << (i < p.labels.size() ? p.labels[i] : std::to_string(i)) << "\n";
        for (const Word& w : p.classes[i].words()) out << w.str() << "\n";
    }
}

Code read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    return read_code(f);
}

void write_code_file(const std::string& path, const Code& c) {
    std::ofstream f(path);
    if (!f) throw parse_error("cannot open " + path + " for writing");
    write_code(f, c);
}

Partition read_partition_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    return read_partition(f);
}

void write_partition_file(const std::string& path, const Partition& p) {
    std::ofstream f(path);
    if (!f) throw parse_error("cannot open " + path + " for writing");
    write_partition(f, p);
}

} // namespace perfectlike
