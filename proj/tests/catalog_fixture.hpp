#pragma once

#include "qmut/classify.hpp"

#ifndef QMUT_TEST_CACHE_DIR
#define QMUT_TEST_CACHE_DIR "catalog-cache"
#endif

// One catalog per test binary, cached on disk between binaries.
inline const qmut::ReferenceCatalog& shared_catalog() {
  static const qmut::ReferenceCatalog catalog = [] {
    qmut::ReferenceCatalog::Options opts;
    opts.cache_dir = QMUT_TEST_CACHE_DIR;
    return qmut::ReferenceCatalog::build(opts);
  }();
  return catalog;
}
