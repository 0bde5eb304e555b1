"""
BinaryInvolutions 二元型对合计算库 - 命令行入口

所有子命令以 JSON 输出到 stdout；日志写到 stderr。
退出码：0 成功，1 输入错误，2 内部检查失败。
"""
import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from loguru import logger

from config.settings import Settings
from data.cache import CoefficientCache
from data.inputs import load_form, load_forms, load_involutor, load_signs
from forms.transvectant import transvectant
from involution.canonical import canonical_basis, canonical_check
from involution.involutor import enumerate_involutors, geometric_involutor, z_from_sign
from involution.sigma import sigma_apply, sigma_product_form
from involution.system import build_sys
from involution.verification import verify_involutor, verify_many
from loci.centre import centre_conditions
from loci.covariants import beta_covariant, lambda_covariant, sextic_cubic_curve
from recoupling.omega import expand_compound, omega
from recoupling.sixj import racah_6j, tetra_cg
from recoupling.theta import theta_coefficients
from report.generator import PaperCheckGenerator
from report.serializers import dumps
from report.templates import ResultTemplates
from ring.errors import InternalCheckError, InvolutionError, UsageError, ValidationError

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INTERNAL = 2


def setup_logging(settings: Settings) -> None:
    """配置日志：stderr 彩色输出，另可写入滚动日志文件"""
    logger.remove()
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <level>{message}</level>",
        level=settings.LOG_LEVEL.upper()
    )
    if settings.LOG_FILE:
        log_path = Path(settings.LOG_FILE)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_path,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {message}",
            rotation="1 day",
            retention="30 days",
            level="DEBUG"
        )


def validate_settings(settings: Settings) -> bool:
    """
    验证配置

    Args:
        settings: 系统配置

    Returns:
        配置是否有效
    """
    is_valid, invalid = settings.validate()

    if not is_valid:
        logger.error("配置验证失败，以下配置项取值不合法:")
        for item in invalid:
            logger.error(f"  - {item}")
        logger.error("请检查 .env 文件或环境变量")

    return is_valid


class CommandParser(argparse.ArgumentParser):
    """用法错误抛出 UsageError，而不是直接以 2 退出"""

    def error(self, message: str):
        raise UsageError(message)


@dataclass
class Command:
    """一次命令行调用"""
    name: str
    flags: Dict[str, Any] = field(default_factory=dict)


def _add_form_option(parser: argparse.ArgumentParser, name: str, help_text: str) -> None:
    parser.add_argument(f'--{name}', dest=f'{name}_path', help=f'{help_text}（JSON 文件）')
    parser.add_argument(f'--{name}-json', dest=f'{name}_json', help=f'{help_text}（内联 JSON）')


def build_parser() -> CommandParser:
    """构造参数解析器"""
    parser = CommandParser(prog='main.py', description='BinaryInvolutions 二元型对合计算库')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('transvect', help='计算超越 (A,B)_r')
    _add_form_option(p, 'a', '二元型 A')
    _add_form_option(p, 'b', '二元型 B')
    p.add_argument('-r', type=int, required=True, help='超越指标')

    p = sub.add_parser('sys', help='构造 SYS(d)')
    p.add_argument('-d', type=int, required=True)

    p = sub.add_parser('involutors', help='枚举全部对合子')
    p.add_argument('-d', type=int, required=True)
    p.add_argument('--verify', choices=['fast', 'symbolic', 'both'], default=None)
    p.add_argument('--max-symbolic-d', type=int, default=None, help='放宽符号验证的 d 上限')

    p = sub.add_parser('z-of-sign', help='符号序列对应的对合子')
    p.add_argument('-s', required=True, help="'+'/'-' 串")

    p = sub.add_parser('verify', help='验证对合子')
    p.add_argument('-s', help="'+'/'-' 串")
    p.add_argument('-d', type=int, help='与 --z 一起使用')
    p.add_argument('--z', help='逗号分隔的 z 分量')
    p.add_argument('--method', choices=['fast', 'symbolic', 'both'], default=None)
    p.add_argument('--max-symbolic-d', type=int, default=None)

    p = sub.add_parser('apply-sigma', help='计算 σ_{Q,z}(F)')
    _add_form_option(p, 'q', '二次型 Q')
    _add_form_option(p, 'f', '二元型 F')
    p.add_argument('-s', help="'+'/'-' 串；省略时使用几何对合子")
    p.add_argument('--factors-json', help='一次因子列表；给出时计算 2^d Π (Q,ℓ_i)_1')

    p = sub.add_parser('canonical', help='标准形判定')
    p.add_argument('-s', required=True)
    _add_form_option(p, 'f', '二元型 F')

    p = sub.add_parser('omega', help='ω 系数')
    for name in ('a', 'b', 'r', 's', 'd'):
        p.add_argument(f'-{name}', type=int, required=True)
    p.add_argument('-t', type=int, default=None, help='只输出单个 t')

    p = sub.add_parser('recouple', help='θ 重耦系数')
    for name in ('a', 'b', 'c', 'r', 's'):
        p.add_argument(f'-{name}', type=int, required=True)

    for name, help_text in (('sixj', 'Racah 6-j 符号'), ('tetra', '四面体归一化')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('labels', nargs=6, metavar='J', help='j1 j2 j3 j12 j23 J，可写作 3/2')

    p = sub.add_parser('centres', help='对合中心方程')
    p.add_argument('-s', required=True)
    _add_form_option(p, 'f', '二元型 F')

    p = sub.add_parser('covariant', help='β 或 λ 协变量')
    p.add_argument('kind', choices=['beta', 'lambda'])
    _add_form_option(p, 'f', '二元型 F')

    p = sub.add_parser('curve', help='六次型的平面三次曲线')
    _add_form_option(p, 'f', '二元型 F')

    p = sub.add_parser('geometric', help='几何对合子')
    p.add_argument('-d', type=int, required=True)

    sub.add_parser('paper-check', help='复算全部参考值')
    return parser


class CommandRunner:
    """子命令执行器"""

    def __init__(self, settings: Settings):
        """
        初始化执行器

        Args:
            settings: 系统配置
        """
        self.settings = settings
        self.cache = CoefficientCache(settings.CACHE_DIR) if settings.USE_COEFFICIENT_CACHE else None
        self.handlers: Dict[str, Callable[[argparse.Namespace], Any]] = {
            'transvect': self.transvect,
            'sys': self.sys,
            'involutors': self.involutors,
            'z-of-sign': self.z_of_sign,
            'verify': self.verify,
            'apply-sigma': self.apply_sigma,
            'canonical': self.canonical,
            'omega': self.omega,
            'recouple': self.recouple,
            'sixj': self.sixj,
            'tetra': self.tetra,
            'centres': self.centres,
            'covariant': self.covariant,
            'curve': self.curve,
            'geometric': self.geometric,
            'paper-check': self.paper_check,
        }

    def execute(self, args: argparse.Namespace) -> Any:
        return self.handlers[args.command](args)

    def _symbolic_limit(self, args: argparse.Namespace) -> int:
        override = getattr(args, 'max_symbolic_d', None)
        return override if override is not None else self.settings.SYMBOLIC_MAX_D

    def transvect(self, args):
        a = load_form(args.a_path, args.a_json, 'a')
        b = load_form(args.b_path, args.b_json, 'b')
        return ResultTemplates.form_result('transvectant', transvectant(a, b, args.r))

    def sys(self, args):
        return build_sys(args.d, cache=self.cache).to_dict()

    def involutors(self, args):
        entries = enumerate_involutors(args.d)
        method = args.verify or self.settings.DEFAULT_VERIFY_METHOD
        verified = verify_many(
            [involutor for _, involutor in entries], method,
            workers=self.settings.VERIFY_WORKERS, max_symbolic_d=self._symbolic_limit(args),
        )
        return ResultTemplates.involutor_list(entries, verified)

    def z_of_sign(self, args):
        signs = load_signs(args.s)
        return ResultTemplates.involutor_result(z_from_sign(signs), signs)

    def verify(self, args):
        if args.s is not None:
            involutor = z_from_sign(load_signs(args.s))
        elif args.z is not None and args.d is not None:
            involutor = load_involutor(args.d, args.z)
        else:
            raise UsageError("verify 需要 -s，或者 -d 与 --z")
        method = args.method or self.settings.DEFAULT_VERIFY_METHOD
        ok = verify_involutor(involutor, method, self._symbolic_limit(args))
        return {'z': list(involutor.z), 'method': method, 'verified': ok}

    def apply_sigma(self, args):
        quadratic = load_form(args.q_path, args.q_json, 'q')
        if args.factors_json is not None:
            return ResultTemplates.form_result('sigma', sigma_product_form(quadratic, load_forms(args.factors_json)))
        form = load_form(args.f_path, args.f_json, 'f')
        involutor = z_from_sign(load_signs(args.s)) if args.s else geometric_involutor(form.order)
        return ResultTemplates.form_result('sigma', sigma_apply(quadratic, involutor, form))

    def canonical(self, args):
        signs = load_signs(args.s)
        form = load_form(args.f_path, args.f_json, 'f')
        return ResultTemplates.canonical_result(canonical_basis(signs), canonical_check(signs, form))

    def omega(self, args):
        if args.t is not None:
            return {'omega': {str(args.t): omega(args.a, args.b, args.r, args.s, args.t, args.d)}}
        return ResultTemplates.omega_result(expand_compound(args.a, args.b, args.r, args.s, args.d))

    def recouple(self, args):
        return ResultTemplates.theta_result(theta_coefficients(args.a, args.b, args.c, args.r, args.s))

    def sixj(self, args):
        return ResultTemplates.sixj_result(racah_6j(*args.labels))

    def tetra(self, args):
        return {'tetra': tetra_cg(*args.labels)}

    def centres(self, args):
        involutor = z_from_sign(load_signs(args.s))
        form = load_form(args.f_path, args.f_json, 'f')
        return list(centre_conditions(involutor, form).generators)

    def covariant(self, args):
        form = load_form(args.f_path, args.f_json, 'f')
        compute = beta_covariant if args.kind == 'beta' else lambda_covariant
        return ResultTemplates.form_result('covariant', compute(form))

    def curve(self, args):
        form = load_form(args.f_path, args.f_json, 'f')
        return {'curve': sextic_cubic_curve(form)}

    def geometric(self, args):
        return ResultTemplates.involutor_result(geometric_involutor(args.d))

    def paper_check(self, args):
        result = PaperCheckGenerator(cache=self.cache).run()
        if not result['passed']:
            failed = [check['name'] for check in result['checks'] if not check['passed']]
            raise _FailedCheck(result, f"参考值未通过: {failed}")
        return result


class _FailedCheck(InternalCheckError):
    """带着完整结果的检查失败，结果仍写到 stdout"""

    def __init__(self, payload: Any, message: str):
        super().__init__(message)
        self.payload = payload


def run(argv: List[str], settings: Optional[Settings] = None) -> int:
    """
    执行一次命令行调用

    Args:
        argv: 不含程序名的参数列表
        settings: 系统配置，默认从环境变量加载

    Returns:
        退出码
    """
    settings = settings or Settings()
    try:
        if not validate_settings(settings):
            return EXIT_VALIDATION
        args = build_parser().parse_args(argv)
        command = Command(args.command, {k: v for k, v in vars(args).items() if k != 'command'})
        logger.debug(f"执行子命令 {command.name}: {command.flags}")
        payload = CommandRunner(settings).execute(args)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except _FailedCheck as e:
        print(dumps(e.payload))
        logger.error(str(e))
        return EXIT_INTERNAL
    except InternalCheckError as e:
        logger.error(f"内部检查失败: {e}")
        return EXIT_INTERNAL
    except (ValidationError, InvolutionError) as e:
        logger.error(f"输入错误: {e}")
        return EXIT_VALIDATION

    print(dumps(payload))
    return EXIT_OK


def main():
    """主函数"""
    settings = Settings()
    setup_logging(settings)
    sys.exit(run(sys.argv[1:], settings))


if __name__ == '__main__':
    main()
