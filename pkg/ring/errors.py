"""
BinaryInvolutions 二元型对合计算库 - 异常定义

所有层共用的异常层次。ValidationError 对应输入问题（命令行退出码 1），
InternalCheckError 对应自检失败（命令行退出码 2）。
"""


class InvolutionError(Exception):
    """库内所有异常的基类"""


class ValidationError(InvolutionError, ValueError):
    """输入格式或取值不合法"""


class RangeError(ValidationError):
    """阶数或指标超出允许范围"""


class TriadError(ValidationError):
    """半整数标签不构成三元组"""


class DegenerateFormError(ValidationError):
    """退化输入（分母为零等）"""


class VariableOrderError(ValidationError):
    """多项式变量表互不兼容"""


class UsageError(ValidationError):
    """命令行用法错误"""


class InternalCheckError(InvolutionError, AssertionError):
    """内部一致性检查失败"""
