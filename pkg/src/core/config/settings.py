from decouple import config


class Settings:
    APP_NAME: str = "Metro Disruption Recovery"

    SOLVER_BACKEND: str = config("SOLVER_BACKEND", default="embedded")
    SOLVER_EPS: float = config("SOLVER_EPS", default=1e-6, cast=float)
    SOLVER_EPS_INT: float = config("SOLVER_EPS_INT", default=1e-6, cast=float)
    SOLVER_NODE_LIMIT: int = config("SOLVER_NODE_LIMIT", default=200000, cast=int)
    SOLVER_ITER_LIMIT: int = config("SOLVER_ITER_LIMIT", default=100000, cast=int)
    SOLVER_THREADS: int = config("SOLVER_THREADS", default=1, cast=int)
    SOLVER_SEED: int = config("SOLVER_SEED", default=0, cast=int)
    SOLVER_TIME_LIMIT: float = config("SOLVER_TIME_LIMIT", default=600.0, cast=float)

    TURNBACK_MINUTES: int = config("TURNBACK_MINUTES", default=3, cast=int)
    DISPATCH_PERIOD_MINUTES: int = config("DISPATCH_PERIOD_MINUTES", default=5, cast=int)
    TIME_STEP_SECONDS: int = config("TIME_STEP_SECONDS", default=20, cast=int)

    LOGGING_CONFIG: str = config("LOGGING_CONFIG", default="logging.ini")
    LOG_LEVEL: str = config("LOG_LEVEL", default="INFO")


settings = Settings()
