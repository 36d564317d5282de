#include "quasi/quasi.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "quasi/builtin.hpp"
#include "quasi/error.hpp"
#include "quasi/report.hpp"

struct qt_context {
  quasi::ReportSettings settings;
  std::string last_error;
};

struct qt_group {
  quasi::GroupPtr group;
};

namespace {

qt_status status_of(quasi::Errc c) {
  using quasi::Errc;
  switch (c) {
    case Errc::invalid_argument: return QT_INVALID_ARGUMENT;
    case Errc::size_limit: return QT_SIZE_LIMIT;
    case Errc::parse: return QT_PARSE;
    case Errc::io: return QT_IO;
    case Errc::internal: return QT_INTERNAL;
    default: return QT_DOMAIN;
  }
}

template <class F>
qt_status guarded(qt_context* ctx, F&& body) {
  if (!ctx) return QT_INVALID_ARGUMENT;
  try {
    body();
    ctx->last_error.clear();
    return QT_OK;
  } catch (const quasi::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return QT_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return QT_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

quasi::Format format_of(qt_format f) {
  if (f == QT_FORMAT_JSON) return quasi::Format::json;
  if (f == QT_FORMAT_TEXT) return quasi::Format::text;
  throw quasi::Error(quasi::Errc::invalid_argument, "unknown output format");
}

template <class F>
qt_status report(qt_context* ctx, const qt_group* g, qt_format fmt, char** out, F&& make) {
  return guarded(ctx, [&] {
    if (!g || !out) throw quasi::Error(quasi::Errc::invalid_argument, "null argument");
    *out = nullptr;
    quasi::ReportSettings s = ctx->settings;
    s.format = format_of(fmt);
    *out = copy_out(make(s));
  });
}

std::string_view required(const char* s, const char* what) {
  if (!s) throw quasi::Error(quasi::Errc::invalid_argument, std::string(what) + " is required");
  return s;
}

std::optional<std::string_view> optional(const char* s) {
  if (!s) return std::nullopt;
  return std::string_view(s);
}

}  // namespace

extern "C" {

qt_context* qt_context_create(void) { return new (std::nothrow) qt_context(); }

void qt_context_destroy(qt_context* ctx) { delete ctx; }

qt_status qt_context_set_max_order(qt_context* ctx, size_t max_order) {
  return guarded(ctx, [&] {
    if (max_order == 0) throw quasi::Error(quasi::Errc::invalid_argument, "max_order must be positive");
    ctx->settings.limits.max_order = max_order;
  });
}

qt_status qt_context_set_max_tuple_scan(qt_context* ctx, size_t max_scan) {
  return guarded(ctx, [&] {
    if (max_scan == 0) throw quasi::Error(quasi::Errc::invalid_argument, "max_tuple_scan must be positive");
    ctx->settings.limits.max_tuple_scan = max_scan;
  });
}

qt_status qt_context_set_threads(qt_context* ctx, unsigned threads) {
  return guarded(ctx, [&] {
    if (threads == 0) throw quasi::Error(quasi::Errc::invalid_argument, "threads must be positive");
    ctx->settings.threads = threads;
  });
}

const char* qt_last_error(const qt_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* qt_status_string(qt_status status) {
  switch (status) {
    case QT_OK: return "ok";
    case QT_INVALID_ARGUMENT: return "invalid argument";
    case QT_SIZE_LIMIT: return "size limit exceeded";
    case QT_PARSE: return "parse error";
    case QT_DOMAIN: return "domain error";
    case QT_IO: return "i/o error";
    case QT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

qt_status qt_group_load(qt_context* ctx, const char* spec, qt_group** out) {
  return guarded(ctx, [&] {
    if (!out) throw quasi::Error(quasi::Errc::invalid_argument, "null argument");
    *out = nullptr;
    auto g = quasi::load_group(required(spec, "group spec"), ctx->settings.limits);
    *out = new qt_group{std::move(g)};
  });
}

void qt_group_destroy(qt_group* group) { delete group; }

size_t qt_group_order(const qt_group* group) { return group ? group->group->order() : 0; }

qt_status qt_report_classes(qt_context* ctx, const qt_group* g, qt_format fmt, char** out) {
  return report(ctx, g, fmt, out, [&](const quasi::ReportSettings& s) { return quasi::report_classes(g->group, s); });
}

qt_status qt_report_chartab(qt_context* ctx, const qt_group* g, qt_format fmt, char** out) {
  return report(ctx, g, fmt, out, [&](const quasi::ReportSettings& s) { return quasi::report_chartab(g->group, s); });
}

qt_status qt_report_gnz(qt_context* ctx, const qt_group* g, unsigned n, qt_format fmt, char** out) {
  return report(ctx, g, fmt, out,
                [&](const quasi::ReportSettings& s) { return quasi::report_gnz(g->group, n, s); });
}

qt_status qt_report_lambda_basis(qt_context* ctx, const qt_group* g, const char* sigma, const char* rep,
                                 qt_format fmt, char** out) {
  return report(ctx, g, fmt, out, [&](const quasi::ReportSettings& s) {
    return quasi::report_lambda_basis(g->group, required(sigma, "sigma"), optional(rep), s);
  });
}

qt_status qt_report_faithful(qt_context* ctx, const qt_group* g, const char* sigma, const char* rep,
                             qt_format fmt, char** out) {
  return report(ctx, g, fmt, out, [&](const quasi::ReportSettings& s) {
    return quasi::report_faithful(g->group, required(sigma, "sigma"), optional(rep), s);
  });
}

qt_status qt_report_sfixed(qt_context* ctx, const qt_group* g, const char* sigma, const char* h,
                           qt_format fmt, char** out) {
  return report(ctx, g, fmt, out, [&](const quasi::ReportSettings& s) {
    return quasi::report_sfixed(g->group, required(sigma, "sigma"), optional(h), s);
  });
}

qt_status qt_report_quasi(qt_context* ctx, const qt_group* g, unsigned n, qt_format fmt, char** out) {
  return report(ctx, g, fmt, out,
                [&](const quasi::ReportSettings& s) { return quasi::report_quasi(g->group, n, s); });
}

void qt_string_free(char* s) { std::free(s); }

}  // extern "C"
