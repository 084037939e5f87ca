from pydantic import BaseSettings, conint


class Settings(BaseSettings):
    COLOR: bool = False

    CARRIER_SIZE: conint(ge=1) = 3
    CARRIER_CAP: conint(ge=1) = 3
    DEPTH: conint(ge=1) = 3
    FUNCTION_CAP: conint(ge=1) = 256
    TABLE_CAP: conint(ge=1) = 4096
    STRING_ATOMS: conint(ge=1) = 2

    class Config:
        env_prefix = "DEEPIND_"


settings = Settings()
