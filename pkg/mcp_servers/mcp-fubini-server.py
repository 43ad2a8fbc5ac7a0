"""
Fubini 多项式 MCP 服务器
========================
精确计算退化 Fubini 型多项式、Apostol-Bernoulli/Euler 多项式、Stirling 数与
部分 Bell 多项式，并运行恒等式验证套件。所有工具返回结构化的 JSON 结果。
"""

import os
import sys
import json
import logging
from datetime import datetime
from typing import Any, Dict, Optional

from fastmcp import FastMCP

# 项目根目录加入 sys.path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.combinatorics import bell_partial, degenerate_unit_args, falling_args, stirling2
from algebra.numeric import format_rational, parse_rational
from algebra.polyring import BiPoly
from config import Config, MCP_FUBINI_HOST, MCP_FUBINI_PORT
from errors import FubiniError
from families.catalog import build_table, check_combinatorics_n, compute_entry, parse_lambda
from families.tables import Family
from verification.report import report_render
from verification.suite import REQUIRED_IDENTITIES, SuiteConfig, run_suite

logger = logging.getLogger(__name__)

TOOLS = [
    "compute_table",
    "compute_value",
    "stirling_number",
    "bell_polynomial",
    "run_verification",
    "get_server_status",
]


# ==========================
# 辅助函数
# ==========================
def create_error_response(error_type: str, message: str, details: Optional[str] = None) -> str:
    """
    创建标准化的错误响应

    Args:
        error_type: 错误类型
        message: 错误消息
        details: 详细错误信息

    Returns:
        str: JSON 格式的错误响应
    """
    error_response = {
        "success": False,
        "error": {
            "type": error_type,
            "message": message,
            "details": details,
            "timestamp": datetime.now().isoformat()
        }
    }
    return json.dumps(error_response, ensure_ascii=False, indent=2)


def create_success_response(data: Dict[str, Any], task_type: str) -> str:
    """
    创建标准化的成功响应

    Args:
        data: 计算结果数据
        task_type: 任务类型

    Returns:
        str: JSON 格式的成功响应
    """
    response = {
        "success": True,
        "task_type": task_type,
        "data": data,
        "timestamp": datetime.now().isoformat()
    }
    return json.dumps(response, ensure_ascii=False, indent=2)


def _guarded(task_type: str, fn, *args, **kwargs) -> str:
    try:
        return create_success_response(fn(*args, **kwargs), task_type)
    except FubiniError as e:
        logger.error(f"❌ {task_type} 失败: {e}")
        return create_error_response(e.error_type, str(e), details=task_type)
    except (ValueError, IndexError) as e:
        logger.error(f"❌ {task_type} 参数错误: {e}")
        return create_error_response("InvalidArgument", str(e), details=task_type)
    except Exception as e:
        logger.exception(f"❌ {task_type} 未知错误")
        return create_error_response("InternalError", str(e), details=type(e).__name__)


# ==========================
# 工具实现 (可直接单元测试)
# ==========================
def _table_data(family: str, alpha: str, n_max: int, gamma: str, lambda_value: str) -> Dict[str, Any]:
    table = build_table(family, alpha, n_max, gamma)
    lam = parse_lambda(lambda_value)
    if lam is not None:
        table = table.substitute_lambda(lam)
    return table.to_json_obj()


def handle_compute_table(family: str, alpha: str = "1", n_max: int = 5, gamma: str = "1",
                         lambda_value: str = "symbolic") -> str:
    logger.info(f"🔧 compute_table: family={family}, alpha={alpha}, n_max={n_max}, gamma={gamma}, lambda={lambda_value}")
    return _guarded("compute_table", _table_data, family, alpha, n_max, gamma, lambda_value)


def _value_data(family, n, alpha, gamma, lambda_value, x, method, verbatim) -> Dict[str, Any]:
    lam = parse_lambda(lambda_value)
    x_value = None if x is None else parse_rational(x)
    result = compute_entry(family, alpha, n, gamma=gamma, lam=lam, x=x_value, method=method, verbatim=verbatim)
    if isinstance(result, BiPoly):
        return {"n": n, "method": method, "kind": "polynomial", "value": result.to_json_obj(), "text": str(result)}
    return {"n": n, "method": method, "kind": "number", "value": str(result)}


def handle_compute_value(family: str, n: int, alpha: str = "1", gamma: str = "1",
                         lambda_value: str = "symbolic", x: Optional[str] = None,
                         method: str = "series", verbatim: bool = False) -> str:
    logger.info(f"🔧 compute_value: family={family}, n={n}, alpha={alpha}, method={method}")
    return _guarded("compute_value", _value_data, family, n, alpha, gamma, lambda_value, x, method, verbatim)


def _stirling_data(n: int, k: int) -> Dict[str, Any]:
    check_combinatorics_n(n, k)
    return {"n": n, "k": k, "value": str(stirling2(n, k))}


def handle_stirling_number(n: int, k: int) -> str:
    return _guarded("stirling_number", _stirling_data, n, k)


def _bell_data(n: int, k: int, args: Optional[str], kind: str, lambda_value: Optional[str]) -> Dict[str, Any]:
    check_combinatorics_n(n, k)
    m = max(n - k + 1, 0)
    if args:
        xs = [parse_rational(part) for part in args.split(",") if part.strip()]
    elif kind == "ones":
        xs = [1] * m
    elif kind in ("degenerate", "falling"):
        if lambda_value is None:
            raise ValueError(f"kind '{kind}' needs lambda_value")
        lam = parse_rational(lambda_value)
        xs = degenerate_unit_args(m, lam) if kind == "degenerate" else falling_args(m, lam)
    else:
        raise ValueError(f"unknown argument kind '{kind}'")
    return {"n": n, "k": k, "args": [format_rational(v) for v in xs], "value": format_rational(bell_partial(n, k, xs))}


def handle_bell_polynomial(n: int, k: int, args: Optional[str] = None, kind: str = "ones",
                           lambda_value: Optional[str] = None) -> str:
    return _guarded("bell_polynomial", _bell_data, n, k, args, kind, lambda_value)


def _verification_data(suite: str, n_max: Optional[int], seed: Optional[int],
                       identities: Optional[str]) -> Dict[str, Any]:
    selected = None
    if identities:
        selected = [part.strip() for part in identities.split(",") if part.strip()]
    config = SuiteConfig.preset(suite, n_max=n_max, seed=seed, identities=selected)
    rendered = report_render(run_suite(config))
    return {
        "suite": config.name,
        "seed": config.seed,
        "summary": rendered.summary,
        "counts": dict(rendered.counts),
        "exit_status": rendered.exit_status,
        "reports": json.loads(rendered.json_text),
    }


def handle_run_verification(suite: str = "quick", n_max: Optional[int] = None, seed: Optional[int] = None,
                            identities: Optional[str] = None) -> str:
    logger.info(f"🧪 run_verification: suite={suite}, n_max={n_max}, seed={seed}")
    return _guarded("run_verification", _verification_data, suite, n_max, seed, identities)


def handle_get_server_status() -> str:
    status = {
        "success": True,
        "server": "Fubini Polynomial MCP Server",
        "status": "running",
        "host": MCP_FUBINI_HOST,
        "port": MCP_FUBINI_PORT,
        "n_max_ceiling": Config.N_MAX_CEILING,
        "families": [f.value for f in Family],
        "identities": list(REQUIRED_IDENTITIES),
        "available_tools": TOOLS,
        "timestamp": datetime.now().isoformat()
    }
    return json.dumps(status, ensure_ascii=False, indent=2)


# ==========================
# MCP 服务器实例
# ==========================
mcp = FastMCP(
    "Fubini Polynomial Server",
    "精确有理数/Q(√2) 运算的退化 Fubini 型多项式与 Apostol 型多项式计算服务器，提供表格、单值、组合数与恒等式验证工具。"
)


@mcp.tool()
def compute_table(family: str, alpha: str = "1", n_max: int = 5, gamma: str = "1",
                  lambda_value: str = "symbolic") -> str:
    """
    计算多项式族的表格 n = 0..n_max

    Args:
        family: deg-fubini / fubini / deg-apostol-bernoulli / deg-apostol-euler / classical-bernoulli / classical-euler
        alpha: 阶数（Fubini 族可为 "p/2"）
        n_max: 最大下标
        gamma: Apostol 参数，例如 "-1/2" 或 "1*s2"
        lambda_value: "symbolic" 或有理数

    Returns:
        str: JSON 格式的表格
    """
    return handle_compute_table(family, alpha, n_max, gamma, lambda_value)


@mcp.tool()
def compute_value(family: str, n: int, alpha: str = "1", gamma: str = "1", lambda_value: str = "symbolic",
                  x: Optional[str] = None, method: str = "series", verbatim: bool = False) -> str:
    """
    计算单个多项式或数值

    Args:
        method: series（生成函数）/ explicit（Stirling 显式公式）/ closed-form（Bell 闭式）
        verbatim: closed-form 时按通常印刷的形式计算

    Returns:
        str: JSON 格式的结果
    """
    return handle_compute_value(family, n, alpha, gamma, lambda_value, x, method, verbatim)


@mcp.tool()
def stirling_number(n: int, k: int) -> str:
    """第二类 Stirling 数 S(n, k)"""
    return handle_stirling_number(n, k)


@mcp.tool()
def bell_polynomial(n: int, k: int, args: Optional[str] = None, kind: str = "ones",
                    lambda_value: Optional[str] = None) -> str:
    """部分 Bell 多项式 B_{n,k}，参数为逗号分隔的有理数或预设 (ones/degenerate/falling)"""
    return handle_bell_polynomial(n, k, args, kind, lambda_value)


@mcp.tool()
def run_verification(suite: str = "quick", n_max: Optional[int] = None, seed: Optional[int] = None,
                     identities: Optional[str] = None) -> str:
    """
    运行恒等式验证套件

    Returns:
        str: JSON 格式的报告（摘要、计数和每个参数点的结果）
    """
    return handle_run_verification(suite, n_max, seed, identities)


@mcp.tool()
def get_server_status() -> str:
    """
    获取服务器状态信息

    Returns:
        str: JSON 格式的服务器状态
    """
    return handle_get_server_status()


# ==========================
# 服务器启动
# ==========================
if __name__ == "__main__":
    Config.validate()
    logger.info("=" * 60)
    logger.info("🧮 Fubini 多项式 MCP 服务器")
    logger.info("=" * 60)
    logger.info(f"📡 服务地址: http://{MCP_FUBINI_HOST}:{MCP_FUBINI_PORT}")
    logger.info(f"🔧 可用工具:")
    for tool in TOOLS:
        logger.info(f"   - {tool}")
    logger.info("=" * 60)
    logger.info("✅ 服务器启动中...")

    try:
        mcp.run(transport="sse", host=MCP_FUBINI_HOST, port=MCP_FUBINI_PORT)
    except KeyboardInterrupt:
        logger.info("\n👋 服务器已停止")
    except Exception as e:
        logger.error(f"❌ 服务器启动失败: {e}")
        sys.exit(1)
