#include "multitor/job.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace multitor {

namespace {

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void syntax_error(int line, const std::string& msg) {
    fail(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

RingPtr parse_ring_decl(int line, const std::string& rest) {
    // <Field>[v1,...,vn] with Field in {Q, F<p>}
    std::string spec = strip(rest);
    std::size_t lb = spec.find('[');
    if (lb == std::string::npos || spec.back() != ']')
        syntax_error(line, "ring declaration must look like Q[x,y] or F7[x,y]");
    std::string field_text = strip(spec.substr(0, lb));
    std::string vars_text = spec.substr(lb + 1, spec.size() - lb - 2);

    FieldSpec field;
    if (field_text == "Q") {
        field = FieldSpec::rationals();
    } else if (field_text.size() > 1 && field_text[0] == 'F' &&
               std::all_of(field_text.begin() + 1, field_text.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        field = FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(field_text.substr(1))));
    } else {
        syntax_error(line, "unknown field '" + field_text + "' (expected Q or Fp)");
    }

    std::vector<std::string> vars;
    std::istringstream is(vars_text);
    std::string v;
    while (std::getline(is, v, ',')) {
        v = strip(v);
        if (v.empty())
            syntax_error(line, "empty variable name in ring declaration");
        vars.push_back(v);
    }
    if (vars.empty())
        syntax_error(line, "ring must declare at least one variable");
    return PolyRing::make(std::move(vars), field);
}

std::vector<Poly> parse_poly_list(int line, const std::string& text, const RingPtr& ring) {
    std::vector<Poly> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item = strip(item);
        if (item.empty())
            syntax_error(line, "empty polynomial in list");
        out.push_back(parse_poly(item, ring));
    }
    if (out.empty())
        syntax_error(line, "expected at least one polynomial");
    return out;
}

struct SymbolTable {
    std::map<std::string, std::vector<Poly>> ideals;
    std::map<std::string, Poly> polys;
    std::map<std::string, std::vector<Poly>> seqs;

    bool declared(const std::string& name) const {
        return ideals.count(name) || polys.count(name) || seqs.count(name);
    }
    const std::vector<Poly>& ideal(int line, const std::string& name) const {
        auto it = ideals.find(name);
        if (it == ideals.end())
            fail(ErrorCode::UndeclaredName,
                 "line " + std::to_string(line) + ": no ideal named '" + name + "'");
        return it->second;
    }
    const Poly& poly(int line, const std::string& name) const {
        auto it = polys.find(name);
        if (it == polys.end())
            fail(ErrorCode::UndeclaredName,
                 "line " + std::to_string(line) + ": no poly named '" + name + "'");
        return it->second;
    }
    const std::vector<Poly>& seq(int line, const std::string& name) const {
        auto it = seqs.find(name);
        if (it == seqs.end())
            fail(ErrorCode::UndeclaredName,
                 "line " + std::to_string(line) + ": no seq named '" + name + "'");
        return it->second;
    }
};

int parse_int_arg(int line, const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        syntax_error(line, "expected a nonnegative integer, got '" + s + "'");
    return std::stoi(s);
}

} // namespace

Job parse_job(const std::string& source) {
    Job job;
    SymbolTable table;
    bool have_ring = false;
    bool have_command = false;

    std::istringstream is(source);
    std::string raw;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty())
            continue;

        std::istringstream ls(line);
        std::string head;
        ls >> head;
        std::string rest;
        std::getline(ls, rest);
        rest = strip(rest);

        if (head == "ring") {
            if (have_ring)
                syntax_error(line_no, "ring already declared");
            job.ring = parse_ring_decl(line_no, rest);
            have_ring = true;
            continue;
        }
        if (head == "output") {
            if (rest == "text")
                job.output = Job::Output::Text;
            else if (rest == "structured")
                job.output = Job::Output::Structured;
            else
                syntax_error(line_no, "output must be 'text' or 'structured'");
            continue;
        }
        if (head == "ideal" || head == "poly" || head == "seq") {
            if (!have_ring)
                syntax_error(line_no, "declaration before ring");
            std::size_t eq = rest.find('=');
            if (eq == std::string::npos)
                syntax_error(line_no, "expected '=' in declaration");
            std::string name = strip(rest.substr(0, eq));
            std::string value = strip(rest.substr(eq + 1));
            if (name.empty())
                syntax_error(line_no, "missing name in declaration");
            if (table.declared(name))
                fail(ErrorCode::DuplicateName,
                     "line " + std::to_string(line_no) + ": name '" + name +
                         "' already declared");
            if (head == "ideal")
                table.ideals[name] = parse_poly_list(line_no, value, job.ring);
            else if (head == "seq")
                table.seqs[name] = parse_poly_list(line_no, value, job.ring);
            else
                table.polys[name] = parse_poly(value, job.ring);
            continue;
        }

        // command statements
        if (!have_ring)
            syntax_error(line_no, "command before ring declaration");
        if (have_command)
            syntax_error(line_no, "a job may contain exactly one command");
        std::vector<std::string> args = split_fields(rest);

        if (head == "serre") {
            if (args.size() != 2)
                syntax_error(line_no, "usage: serre <I> <J>");
            job.command = Job::Command::Serre;
            job.ideal_a = table.ideal(line_no, args[0]);
            job.ideal_b = table.ideal(line_no, args[1]);
        } else if (head == "tor") {
            if (args.size() != 2 && args.size() != 3)
                syntax_error(line_no, "usage: tor <I> <J> [qmax]");
            job.command = Job::Command::Tor;
            job.ideal_a = table.ideal(line_no, args[0]);
            job.ideal_b = table.ideal(line_no, args[1]);
            if (args.size() == 3)
                job.q = parse_int_arg(line_no, args[2]);
        } else if (head == "multitor") {
            if (args.size() != 1 && args.size() != 2)
                syntax_error(line_no, "usage: multitor <seq> [qmax]");
            job.command = Job::Command::Multitor;
            job.seq = table.seq(line_no, args[0]);
            if (args.size() == 2)
                job.q = parse_int_arg(line_no, args[1]);
        } else if (head == "resolve") {
            if (args.size() != 1 && args.size() != 2)
                syntax_error(line_no, "usage: resolve <I> [maxlen]");
            job.command = Job::Command::Resolve;
            job.ideal_a = table.ideal(line_no, args[0]);
            if (args.size() == 2)
                job.q = parse_int_arg(line_no, args[1]);
        } else if (head == "koszul") {
            if (args.size() != 1)
                syntax_error(line_no, "usage: koszul <seq>");
            job.command = Job::Command::Koszul;
            job.seq = table.seq(line_no, args[0]);
        } else if (head == "verify") {
            if (args.empty())
                syntax_error(line_no, "usage: verify <claim> ...");
            job.command = Job::Command::Verify;
            job.verify_sub = args[0];
            if (job.verify_sub == "prop31" || job.verify_sub == "cor32" ||
                job.verify_sub == "pullback") {
                if (args.size() != 4)
                    syntax_error(line_no, "usage: verify " + job.verify_sub + " <seq> <x> <q>");
                job.seq = table.seq(line_no, args[1]);
                job.xpoly = table.poly(line_no, args[2]);
                job.q = parse_int_arg(line_no, args[3]);
            } else if (job.verify_sub == "torind") {
                if (args.size() != 3)
                    syntax_error(line_no, "usage: verify torind <I> <x>");
                job.ideal_a = table.ideal(line_no, args[1]);
                job.xpoly = table.poly(line_no, args[2]);
            } else if (job.verify_sub == "main") {
                if (args.size() != 4)
                    syntax_error(line_no, "usage: verify main <seq> <x> <qmax>");
                job.seq = table.seq(line_no, args[1]);
                job.xpoly = table.poly(line_no, args[2]);
                job.q = parse_int_arg(line_no, args[3]);
            } else {
                syntax_error(line_no, "unknown verify claim '" + job.verify_sub + "'");
            }
        } else {
            syntax_error(line_no, "unknown statement '" + head + "'");
        }
        have_command = true;
    }
    if (!have_ring)
        fail(ErrorCode::SyntaxError, "missing ring declaration");
    if (!have_command)
        fail(ErrorCode::SyntaxError, "missing command");
    return job;
}

// ---------------------------------------------------------------------------
// Running

namespace {

std::string length_str(const std::optional<std::uint64_t>& l) {
    return l.has_value() ? std::to_string(*l) : "infinite";
}

std::string module_gens_gb(const SubquotientModule& m) {
    return module_groebner(m.ring, m.ambient_rank, m.gens).str();
}

std::string module_rels_gb(const SubquotientModule& m) {
    return module_groebner(m.ring, m.ambient_rank, m.rels).str();
}

void emit_tor_report(std::ostringstream& os, const TorReport& rep, const std::string& prefix,
                     Job::Output mode) {
    for (const auto& e : rep.entries) {
        if (mode == Job::Output::Structured) {
            os << prefix << ".q" << e.q << ".length = " << length_str(e.length) << "\n";
            os << prefix << ".q" << e.q << ".rank = " << e.rank << "\n";
        } else {
            os << "Tor^" << e.q << ": length " << length_str(e.length) << ", generic rank "
               << e.rank << "\n";
            os << "  generators GB: " << module_gens_gb(e.module) << "\n";
            os << "  relations  GB: " << module_rels_gb(e.module) << "\n";
        }
    }
}

void emit_complex(std::ostringstream& os, const FreeComplex& c, const std::string& prefix,
                  Job::Output mode) {
    if (mode == Job::Output::Structured) {
        os << prefix << ".length = " << c.length() << "\n";
        for (int q = 0; q <= c.length(); ++q)
            os << prefix << ".rank." << q << " = " << c.rank_at(q) << "\n";
        for (int q = 1; q <= c.length(); ++q)
            os << prefix << ".diff." << q << " = " << c.diff(q).str() << "\n";
    } else {
        os << c.report();
    }
}

void emit_verifier(std::ostringstream& os, const VerifierReport& rep, Job::Output mode) {
    if (mode == Job::Output::Structured) {
        os << "verify.claim = " << rep.claim << "\n";
        os << "verify.instance = " << rep.instance << "\n";
        for (const auto& c : rep.checks)
            os << "verify.check." << c.name << " = " << (c.pass ? "pass" : "fail") << "\n";
        if (!rep.witness.empty())
            os << "verify.witness = " << rep.witness << "\n";
        os << "verify.verdict = " << verdict_str(rep.verdict) << "\n";
    } else {
        os << rep.str();
    }
}

} // namespace

JobResult run_job(const Job& job) {
    std::ostringstream os;
    JobResult result;
    const bool structured = job.output == Job::Output::Structured;

    if (structured) {
        const char* names[] = {"serre", "tor", "multitor", "resolve", "koszul", "verify"};
        os << "job.command = " << names[static_cast<int>(job.command)] << "\n";
        os << "ring = " << job.ring->str() << "\n";
    } else {
        os << "ring " << job.ring->str() << "\n";
    }

    switch (job.command) {
    case Job::Command::Serre: {
        TorReport rep = tor_pair_report(job.ring, job.ideal_a, job.ideal_b);
        std::int64_t mult = serre_multiplicity(job.ring, job.ideal_a, job.ideal_b);
        if (structured) {
            for (const auto& e : rep.entries)
                os << "tor.q" << e.q << ".length = " << length_str(e.length) << "\n";
            os << "serre.multiplicity = " << mult << "\n";
        } else {
            emit_tor_report(os, rep, "tor", job.output);
            os << "Serre intersection multiplicity: " << mult << "\n";
        }
        break;
    }
    case Job::Command::Tor: {
        TorReport rep = tor_pair_report(job.ring, job.ideal_a, job.ideal_b, job.q);
        emit_tor_report(os, rep, "tor", job.output);
        break;
    }
    case Job::Command::Multitor: {
        int qmax = job.q >= 0 ? job.q : static_cast<int>(job.seq.size());
        TorReport rep = multitor_report(job.ring, job.seq, qmax);
        emit_tor_report(os, rep, "multitor", job.output);
        break;
    }
    case Job::Command::Resolve: {
        int maxlen = job.q >= 0 ? job.q : job.ring->nvars() + 1;
        FreeComplex res = free_resolution(job.ring, job.ideal_a, maxlen);
        emit_complex(os, res, "resolve", job.output);
        break;
    }
    case Job::Command::Koszul: {
        FreeComplex k = koszul_complex(job.ring, job.seq);
        emit_complex(os, k, "koszul", job.output);
        break;
    }
    case Job::Command::Verify: {
        VerifierReport rep;
        if (job.verify_sub == "prop31")
            rep = check_prop_affine(job.ring, job.seq, job.xpoly, job.q);
        else if (job.verify_sub == "cor32")
            rep = check_cor_regular(job.ring, job.seq, job.xpoly, job.q);
        else if (job.verify_sub == "pullback")
            rep = check_pullback_square(job.ring, job.seq, job.xpoly, job.q);
        else if (job.verify_sub == "torind")
            rep = check_tor_independence(job.ring, job.ideal_a, job.xpoly);
        else if (job.verify_sub == "main")
            rep = verify_main_theorem_affine(job.ring, job.seq, job.xpoly, job.q);
        else
            fail(ErrorCode::SyntaxError, "unknown verify claim " + job.verify_sub);
        emit_verifier(os, rep, job.output);
        if (rep.verdict != Verdict::Verified)
            result.exit_code = 1;
        break;
    }
    }
    result.output = os.str();
    return result;
}

JobResult run_job_text(const std::string& source) {
    try {
        Job job = parse_job(source);
        return run_job(job);
    } catch (const Error& e) {
        return JobResult{2, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace multitor
