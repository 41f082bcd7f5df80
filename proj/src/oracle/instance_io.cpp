#include "polar/oracle/instance_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace polar::oracle {

namespace {

int hex_width(int order) { return order > 16 ? 2 : 1; }

std::string expect_key(std::istream& in, const std::string& key)
{
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing '" + key + "' line");
    std::istringstream ls(line);
    std::string k;
    ls >> k;
    if (k != key) throw FormatError("expected '" + key + "', found '" + k + "'");
    std::string rest;
    std::getline(ls, rest);
    const auto start = rest.find_first_not_of(' ');
    return start == std::string::npos ? "" : rest.substr(start);
}

long to_long(const std::string& s)
{
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw FormatError("trailing characters in '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw FormatError("not an integer: '" + s + "'");
    }
}

FormKind parse_form(const std::string& name)
{
    for (FormKind k : {FormKind::Alternating, FormKind::QuadraticPlus, FormKind::QuadraticParabolic,
                       FormKind::QuadraticMinus, FormKind::Hermitian})
        if (name == form_name(k)) return k;
    throw FormatError("unknown form '" + name + "'");
}

}  // namespace

void write_instance(std::ostream& out, const PolarSpaceInstance& inst)
{
    const int w = hex_width(inst.field.order());
    out << "polar-instance 1\n";
    out << "family " << kind_name(inst.spec.kind()) << "\n";
    out << "rank " << inst.spec.rank() << "\n";
    out << "q " << inst.spec.q() << "\n";
    out << "field-order " << inst.field.order() << "\n";
    out << "modulus";
    for (int c : inst.field.modulus()) out << ' ' << c;
    out << "\n";
    out << "form " << form_name(inst.form.kind) << ' ' << inst.form.dim << ' ' << static_cast<int>(inst.form.delta) << "\n";
    out << "isotropic-counts";
    for (long c : inst.isotropic_counts) out << ' ' << c;
    out << "\n";
    out << "generators " << inst.size() << "\n";
    out << std::hex << std::nouppercase;
    for (const Matrix& g : inst.generators) {
        for (std::size_t r = 0; r < g.size(); ++r) {
            if (r) out << ' ';
            for (Elem e : g[r]) out << std::setw(w) << std::setfill('0') << static_cast<int>(e);
        }
        out << "\n";
    }
    out << std::dec;
}

PolarSpaceInstance read_instance(std::istream& in)
{
    if (expect_key(in, "polar-instance") != "1") throw FormatError("unsupported format version");
    const auto kind = parse_kind(expect_key(in, "family"));
    if (!kind) throw FormatError("unknown family");
    const long rank = to_long(expect_key(in, "rank"));
    const long q = to_long(expect_key(in, "q"));
    const SchemeSpec spec(*kind, rank, q);
    const int order = static_cast<int>(to_long(expect_key(in, "field-order")));

    const Field field(order);
    std::istringstream mod(expect_key(in, "modulus"));
    std::vector<int> modulus;
    for (int c; mod >> c;) modulus.push_back(c);
    if (modulus != field.modulus()) throw FormatError("field modulus differs from this build's construction");

    std::istringstream fs(expect_key(in, "form"));
    std::string form_kind;
    int dim = 0;
    int delta = 0;
    fs >> form_kind >> dim >> delta;
    FormSpec form{parse_form(form_kind), dim, order, static_cast<Elem>(delta)};
    const FormSpec expected = standard_form(spec);
    if (form.kind != expected.kind || form.dim != expected.dim || form.field_order != expected.field_order ||
        form.delta != expected.delta)
        throw FormatError("form does not match the standard form of " + spec.label());

    std::istringstream cs(expect_key(in, "isotropic-counts"));
    std::vector<long> counts;
    for (long c; cs >> c;) counts.push_back(c);

    const long count = to_long(expect_key(in, "generators"));
    const int w = hex_width(order);
    std::vector<Matrix> gens;
    std::string line;
    while (static_cast<long>(gens.size()) < count && std::getline(in, line)) {
        std::istringstream ls(line);
        Matrix g;
        for (std::string row; ls >> row;) {
            if (static_cast<int>(row.size()) != dim * w) throw FormatError("row of wrong length: " + row);
            Vec v;
            for (int i = 0; i < dim; ++i) {
                const int e = std::stoi(row.substr(static_cast<std::size_t>(i * w), static_cast<std::size_t>(w)), nullptr, 16);
                if (e >= order) throw FormatError("element out of range in " + row);
                v.push_back(static_cast<Elem>(e));
            }
            g.push_back(std::move(v));
        }
        if (static_cast<long>(g.size()) != rank) throw FormatError("generator with wrong number of rows");
        gens.push_back(std::move(g));
    }
    if (static_cast<long>(gens.size()) != count) throw FormatError("truncated generator list");

    try {
        return assemble(spec, form, std::move(gens), std::move(counts));
    } catch (const InvariantViolation& e) {
        throw FormatError(std::string("stored instance fails its checks: ") + e.what());
    }
}

PolarSpaceInstance load_or_enumerate(const SchemeSpec& spec, const std::optional<std::filesystem::path>& cache_dir,
                                     const EnumerateOptions& options)
{
    if (!cache_dir) return enumerate(spec, options);
    const std::filesystem::path file = *cache_dir / (std::string(kind_name(spec.kind())) + "-n" +
                                                     std::to_string(spec.rank()) + "-q" + std::to_string(spec.q()) + ".txt");
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        PolarSpaceInstance inst = read_instance(in);
        if (!(inst.spec == spec)) throw FormatError("cached file holds a different space: " + file.string());
        return inst;
    }
    PolarSpaceInstance inst = enumerate(spec, options);
    std::filesystem::create_directories(*cache_dir);
    std::ofstream out(file);
    write_instance(out, inst);
    return inst;
}

}  // namespace polar::oracle
