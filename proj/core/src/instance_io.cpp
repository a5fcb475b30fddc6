#include <dpcolor/instance_io.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace dpc {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
            ++pos;
        if (pos > start)
            words.push_back(line.substr(start, pos - start));
    }
    return words;
}

int parse_int(std::string_view word, int line, const char *what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + std::string(word) + "'");
    return value;
}

int parse_keyed(std::string_view word, std::string_view key, int line) {
    if (word.size() <= key.size() + 1 || word.substr(0, key.size()) != key || word[key.size()] != '=')
        throw ParseError(line, "expected " + std::string(key) + "=<int>, got '" + std::string(word) + "'");
    return parse_int(word.substr(key.size() + 1), line, key.data());
}

struct PendingEdge {
    Edge edge;
    std::optional<Sign> sign;
    int line;
};

} // namespace

ParsedInstance parse_instance(std::string_view text) {
    std::optional<DefectParams> params;
    std::optional<int> n;
    std::map<int, std::pair<Capacity, int>> caps;
    std::vector<PendingEdge> edges;
    bool header_seen = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty())
            continue;

        const auto &kw = words[0];
        if (!header_seen) {
            if (kw != "dpgraph")
                throw ParseError(line_no, "file must start with 'dpgraph 1'");
            if (words.size() != 2 || words[1] != "1")
                throw ParseError(line_no, "unsupported format version");
            header_seen = true;
            continue;
        }

        if (kw == "dpgraph") {
            throw ParseError(line_no, "repeated header");
        } else if (kw == "params") {
            if (params)
                throw ParseError(line_no, "repeated params line");
            if (words.size() != 3)
                throw ParseError(line_no, "expected 'params i=<int> j=<int>'");
            DefectParams p{parse_keyed(words[1], "i", line_no), parse_keyed(words[2], "j", line_no)};
            if (p.i < 0 || p.j < p.i)
                throw ParseError(line_no, "defect parameters must satisfy 0 <= i <= j");
            params = p;
        } else if (kw == "vertices") {
            if (n)
                throw ParseError(line_no, "repeated vertices line");
            if (words.size() != 2)
                throw ParseError(line_no, "expected 'vertices <n>'");
            int count = parse_int(words[1], line_no, "vertex count");
            if (count < 0)
                throw ParseError(line_no, "negative vertex count");
            n = count;
        } else if (kw == "cap") {
            if (!params || !n)
                throw ParseError(line_no, "'cap' before 'params' and 'vertices'");
            if (words.size() != 4)
                throw ParseError(line_no, "expected 'cap <v> <c1> <c2>'");
            int v = parse_int(words[1], line_no, "vertex");
            Capacity c{parse_int(words[2], line_no, "c1"), parse_int(words[3], line_no, "c2")};
            if (v < 0 || v >= *n)
                throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
            if (c.poor < -1 || c.poor > params->i || c.rich < -1 || c.rich > params->j)
                throw ParseError(line_no, "capacity out of range [-1,i]x[-1,j]");
            if (!caps.emplace(v, std::pair{c, line_no}).second)
                throw ParseError(line_no, "duplicate capacity for vertex " + std::to_string(v));
        } else if (kw == "edge") {
            if (!n)
                throw ParseError(line_no, "'edge' before 'vertices'");
            if (words.size() != 3 && words.size() != 4)
                throw ParseError(line_no, "expected 'edge <u> <v> [P|T]'");
            int u = parse_int(words[1], line_no, "endpoint");
            int v = parse_int(words[2], line_no, "endpoint");
            if (u == v)
                throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= *n || v >= *n)
                throw ParseError(line_no, "edge endpoint out of range");
            std::optional<Sign> sign;
            if (words.size() == 4) {
                if (words[3] == "P")
                    sign = Sign::Parallel;
                else if (words[3] == "T")
                    sign = Sign::Twisted;
                else
                    throw ParseError(line_no, "edge sign must be P or T");
            }
            edges.push_back({Edge(u, v), sign, line_no});
        } else {
            throw ParseError(line_no, "unknown declaration '" + std::string(kw) + "'");
        }
    }

    if (!header_seen)
        throw ParseError(line_no, "missing 'dpgraph 1' header");
    if (!params)
        throw ParseError(line_no, "missing 'params' line");
    if (!n)
        throw ParseError(line_no, "missing 'vertices' line");

    std::map<Edge, int> seen;
    std::size_t signed_count = 0;
    for (const auto &pe : edges) {
        auto [it, fresh] = seen.emplace(pe.edge, pe.line);
        if (!fresh)
            throw ParseError(pe.line, "duplicate edge " + std::to_string(pe.edge.u) + " " +
                                          std::to_string(pe.edge.v) + " (first on line " +
                                          std::to_string(it->second) + ")");
        if (pe.sign)
            ++signed_count;
    }
    if (signed_count != 0 && signed_count != edges.size()) {
        for (const auto &pe : edges) {
            if (!pe.sign)
                throw ParseError(pe.line, "unsigned edge in a file with signed edges");
        }
    }

    std::vector<Edge> edge_list;
    edge_list.reserve(edges.size());
    for (const auto &pe : edges)
        edge_list.push_back(pe.edge);
    SimpleGraph graph(*n, edge_list);

    CapacityFunction cf(static_cast<std::size_t>(*n), Capacity{params->i, params->j});
    for (const auto &[v, entry] : caps)
        cf[static_cast<std::size_t>(v)] = entry.first;

    ParsedInstance out{WeightedInstance(std::move(graph), *params, std::move(cf)), std::nullopt};
    if (signed_count != 0) {
        std::vector<Sign> signs(edges.size());
        for (const auto &pe : edges)
            signs[static_cast<std::size_t>(*out.instance.graph().edge_index(pe.edge.u, pe.edge.v))] = *pe.sign;
        out.signing = CoverSigning(std::move(signs));
    }
    return out;
}

std::string serialize_instance(const WeightedInstance &instance, const std::optional<CoverSigning> &signing) {
    const auto &g = instance.graph();
    if (signing)
        check_signing(g, *signing);
    std::ostringstream out;
    out << "dpgraph 1\n";
    out << "params i=" << instance.params().i << " j=" << instance.params().j << "\n";
    out << "vertices " << g.vertex_count() << "\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "cap " << v << " " << instance.capacity(v).poor << " " << instance.capacity(v).rich << "\n";
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        out << "edge " << g.edge(e).u << " " << g.edge(e).v;
        if (signing)
            out << " " << to_char((*signing)[e]);
        out << "\n";
    }
    return out.str();
}

ParsedInstance read_instance_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const std::string &path, const WeightedInstance &instance,
                         const std::optional<CoverSigning> &signing) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_instance(instance, signing);
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

std::string instance_digest(const WeightedInstance &instance, const std::optional<CoverSigning> &signing) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize_instance(instance, signing)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace dpc
