#include "knotpoly/braid.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace knotpoly {

void BraidWord::validate() const {
    if (strands < 1)
        throw std::invalid_argument("braid word needs at least one strand");
    for (int k : letters) {
        if (k == 0 || std::abs(k) > strands - 1)
            throw std::invalid_argument(
                "braid letter " + std::to_string(k) + " out of range for " +
                std::to_string(strands) + " strands");
    }
}

BraidWord BraidWord::parse(const std::string& text) {
    BraidWord b;
    std::string body = text;
    const size_t eq = text.find("strands=");
    if (eq != std::string::npos) {
        size_t pos = eq + 8;
        size_t end = pos;
        while (end < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[end])) ||
                text[end] == '-' || text[end] == '+'))
            ++end;
        try {
            b.strands = std::stoi(text.substr(pos, end - pos));
        } catch (const std::exception&) {
            throw std::invalid_argument("braid word: malformed strands= header");
        }
        while (end < text.size() &&
               (text[end] == ';' || std::isspace(static_cast<unsigned char>(text[end]))))
            ++end;
        body = text.substr(end);
    }
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            const int k = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            b.letters.push_back(k);
        } catch (const std::exception&) {
            throw std::invalid_argument("braid word: bad letter '" + tok + "'");
        }
    }
    b.validate();
    return b;
}

std::string BraidWord::str() const {
    std::ostringstream out;
    out << "strands=" << strands << ";";
    for (int k : letters) out << " " << k;
    return out.str();
}

BraidWord BraidWord::from_json(const std::string& json) {
    const nlohmann::json j = nlohmann::json::parse(json);
    if (!j.contains("strands") || !j.contains("letters"))
        throw std::invalid_argument("braid word JSON needs strands and letters");
    BraidWord b;
    b.strands = j.at("strands").get<int>();
    b.letters = j.at("letters").get<std::vector<int>>();
    b.validate();
    return b;
}

std::string BraidWord::to_json() const {
    nlohmann::json j;
    j["strands"] = strands;
    j["letters"] = letters;
    return j.dump();
}

std::vector<int> BraidWord::permutation() const {
    validate();
    // at[p-1] = strand currently occupying position p, bottom to top
    std::vector<int> at(static_cast<size_t>(strands));
    std::iota(at.begin(), at.end(), 1);
    for (int letter : letters) {
        const size_t k = static_cast<size_t>(std::abs(letter));
        std::swap(at[k - 1], at[k]);
    }
    std::vector<int> perm(static_cast<size_t>(strands));
    for (int p = 1; p <= strands; ++p)
        perm[static_cast<size_t>(at[static_cast<size_t>(p) - 1]) - 1] = p;
    return perm;
}

int component_count(const BraidWord& beta) {
    const std::vector<int> perm = beta.permutation();
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]) - 1;
        }
    }
    return cycles;
}

bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
}

BraidWord markov_conjugate(const BraidWord& beta, const BraidWord& gamma) {
    if (beta.strands != gamma.strands)
        throw std::invalid_argument("conjugation needs equal strand counts");
    BraidWord out;
    out.strands = beta.strands;
    out.letters = gamma.letters;
    out.letters.insert(out.letters.end(), beta.letters.begin(), beta.letters.end());
    for (auto it = gamma.letters.rbegin(); it != gamma.letters.rend(); ++it)
        out.letters.push_back(-*it);
    out.validate();
    return out;
}

BraidWord markov_stabilize(const BraidWord& beta, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("stabilization sign must be +1 or -1");
    BraidWord out;
    out.strands = beta.strands + 1;
    out.letters = beta.letters;
    out.letters.push_back(sign * beta.strands);
    out.validate();
    return out;
}

SparseOp rho(const EnhancedRMatrix& E, const BraidWord& beta) {
    beta.validate();
    const size_t n = static_cast<size_t>(beta.strands);
    SparseOp M = SparseOp::identity(E.dim, n, E.ctx);
    for (int letter : beta.letters) {
        const size_t k = static_cast<size_t>(std::abs(letter));
        const SparseOp& gen = letter > 0 ? E.R : E.R_inv;
        M = gen.embed_two_site(k, k + 1, n).compose(M);
    }
    return M;
}

ClosureResult closure_mrt(const EnhancedRMatrix& E, const BraidWord& beta) {
    const size_t n = static_cast<size_t>(beta.strands);
    SparseOp M = rho(E, beta);
    // decorate factors 2..n with the closure operator, then trace them out
    // from the top factor inward
    SparseOp deco = SparseOp::identity(E.dim, 1, E.ctx);
    for (size_t i = 1; i < n; ++i) deco = deco.tensor(E.h);
    SparseOp full = deco.compose(M);
    const MultiLaurent full_trace = full.trace();
    for (size_t i = n; i >= 2; --i) full = full.partial_trace(i);

    ClosureResult res;
    res.components = component_count(beta);
    const auto scalar = full.as_scalar_multiple_of_identity();
    if (!scalar)
        throw std::domain_error(
            "closure of '" + beta.str() + "' under " + E.name +
            " is not a scalar multiple of the identity");
    res.scalar = *scalar;
    // independent form of the same number: the full decorated trace over dim V
    const MultiLaurent by_trace =
        full_trace * GaussRational(mpq_class(1, static_cast<long>(E.dim)));
    if (!(by_trace == res.scalar))
        throw std::domain_error(
            "closure trace cross-check failed for '" + beta.str() + "' under " +
            E.name);
    res.op = std::move(full);
    return res;
}

SparseOp left_closure(const EnhancedRMatrix& E, const SparseOp& F) {
    SparseOp deco = SparseOp::identity(E.dim, 1, E.ctx).tensor(E.h);
    return deco.compose(F).partial_trace(2);
}

SparseOp right_closure(const EnhancedRMatrix& E, const SparseOp& F) {
    SparseOp deco = E.h.invert().tensor(SparseOp::identity(E.dim, 1, E.ctx));
    return F.compose(deco).partial_trace(1);
}

} // namespace knotpoly
