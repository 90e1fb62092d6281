#include "permcode/core/extension.h"

#include <algorithm>
#include <string>

#include "permcode/core/error.h"

namespace permcode {
namespace {

// Singly linked order over symbols 1..capacity; 0 terminates.
struct SuccessorList {
  int head = 0;
  std::vector<int> next;

  SuccessorList(const Permutation& pi, int capacity) : next(capacity + 1, 0) {
    head = pi(1);
    for (int i = 1; i < pi.size(); ++i) next[pi(i)] = pi(i + 1);
  }

  void InsertAfter(int anchor, int symbol) {
    next[symbol] = next[anchor];
    next[anchor] = symbol;
  }

  std::vector<int> Walk() const {
    std::vector<int> out;
    for (int v = head; v != 0; v = next[v]) out.push_back(v);
    return out;
  }
};

void CheckAnchors(std::span<const int> anchors, int n) {
  for (int s : anchors) {
    if (s == kUnrecoverableAnchor) {
      throw ParameterError("extension anchor is the unrecoverable sentinel");
    }
    if (s < 1 || s > n) {
      throw ParameterError("extension anchor " + std::to_string(s) + " outside [1, " +
                           std::to_string(n) + "]");
    }
  }
}

}  // namespace

Permutation Extend(const Permutation& pi, std::span<const int> anchors) {
  const int n = pi.size();
  CheckAnchors(anchors, n);
  const int k = static_cast<int>(anchors.size());
  SuccessorList list(pi, n + k);
  for (int m = 1; m <= k; ++m) list.InsertAfter(anchors[m - 1], n + m);
  return Permutation(list.Walk());
}

std::vector<int> Truncate(std::span<const int> sigma, std::span<const int> removed) {
  int max_symbol = 0;
  for (int v : sigma) {
    if (v < 1) throw ParameterError("truncate: symbols must be positive");
    max_symbol = std::max(max_symbol, v);
  }
  std::vector<bool> present(max_symbol + 1, false);
  for (int v : sigma) present[v] = true;
  std::vector<bool> drop(max_symbol + 1, false);
  for (int u : removed) {
    if (u < 1 || u > max_symbol || !present[u]) {
      throw ParameterError("truncate: symbol " + std::to_string(u) + " not present");
    }
    drop[u] = true;
  }
  std::vector<int> out;
  out.reserve(sigma.size());
  for (int v : sigma) {
    if (!drop[v]) out.push_back(v);
  }
  return out;
}

Permutation TruncateToMessage(const Permutation& sigma, int n) {
  if (n < 1 || n > sigma.size()) throw ParameterError("truncate: message length out of range");
  std::vector<int> out;
  out.reserve(n);
  for (int v : sigma.entries()) {
    if (v <= n) out.push_back(v);
  }
  return Permutation(std::move(out));
}

ExtensionSequence RecoverExtensionSequence(const Permutation& sigma_prime, int n, int k) {
  if (n < 1 || k < 0 || sigma_prime.size() != n + k) {
    throw ParameterError("recover extension sequence: expected length n + k");
  }
  const int total = n + k;
  // Doubly linked list over symbols.
  std::vector<int> prev(total + 1, 0), next(total + 1, 0);
  for (int i = 1; i < total; ++i) {
    next[sigma_prime(i)] = sigma_prime(i + 1);
    prev[sigma_prime(i + 1)] = sigma_prime(i);
  }
  ExtensionSequence anchors(k, kUnrecoverableAnchor);
  for (int m = k; m >= 1; --m) {
    const int symbol = n + m;
    const int before = prev[symbol];
    if (before >= 1 && before <= n) anchors[m - 1] = before;
    const int after = next[symbol];
    if (before != 0) next[before] = after;
    if (after != 0) prev[after] = before;
  }
  return anchors;
}

std::set<int> HammingSet(std::span<const int> v1, std::span<const int> v2) {
  if (v1.size() != v2.size()) throw ParameterError("hamming set: length mismatch");
  std::set<int> out;
  for (std::size_t m = 0; m < v1.size(); ++m) {
    if (v1[m] != v2[m]) out.insert(v1[m]);
  }
  return out;
}

std::vector<int> JumpSet(const Permutation& pi1, const Permutation& pi2,
                         std::span<const int> s1, std::span<const int> s2) {
  if (pi1.size() != pi2.size()) throw ParameterError("jump set: permutation length mismatch");
  if (s1.size() != s2.size()) throw ParameterError("jump set: sequence length mismatch");
  const int n = pi1.size();
  CheckAnchors(s1, n);
  CheckAnchors(s2, n);
  const int k = static_cast<int>(s1.size());
  SuccessorList list1(pi1, n + k);
  SuccessorList list2(pi2, n + k);
  std::vector<int> jumps;
  for (int m = 1; m <= k; ++m) {
    const int a1 = s1[m - 1];
    const int a2 = s2[m - 1];
    if (a1 != a2) {
      const int after1 = list1.next[a1];
      const int after2 = list2.next[a2];
      // A zero successor means the anchor currently sits in the last position.
      if (after1 == 0 || after2 == 0 || after1 != after2) jumps.push_back(m);
    }
    list1.InsertAfter(a1, n + m);
    list2.InsertAfter(a2, n + m);
  }
  return jumps;
}

}  // namespace permcode
